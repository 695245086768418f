#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace etalepi {

inline constexpr const char* kVersion = "1.0.0";

enum class Subcommand { clusters, present, orbits, verify_topology };
enum class OutputFormat { text, json, relators, csv };

struct RunConfig {
  Subcommand subcommand = Subcommand::present;
  std::string input;  // branch data, or the witness family for verify-topology
  OutputFormat format = OutputFormat::text;
  // orbits
  std::string group;
  std::optional<std::uint64_t> p;
  bool surjective_only = true;
  std::uint64_t max_tuples = 10'000'000;
  int threads = 1;
  // verify-topology
  std::optional<int> samples;
  std::optional<int> max_refinements;
};

/// Exit status: 0 success, 1 domain error (error JSON on `err`), 2 usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace etalepi
