#include "etalepi/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "etalepi/errors.hpp"
#include "etalepi/json_io.hpp"

namespace etalepi {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Pipeline {
  BranchInput input;
  CanonicalOrder canon;
  ClusterForest forest;
};

Pipeline load_pipeline(const std::string& path) {
  Pipeline p;
  p.input = parse_branch_input(read_json_file(path));
  p.canon = canonical_order(compute_matrix(p.input));
  p.forest = compute_clusters(p.canon.matrix);
  return p;
}

void require_format(OutputFormat f, std::initializer_list<OutputFormat> allowed, const char* sub) {
  for (auto a : allowed)
    if (a == f) return;
  throw UsageError(std::string("output format not supported by '") + sub + "'");
}

std::string interval_text(const Cluster& c) {
  std::ostringstream out;
  out << "({";
  for (int i = c.first; i <= c.last(); ++i) out << (i > c.first ? "," : "") << i;
  out << "}, " << c.depth << ")";
  return out.str();
}

void print_subtree(std::ostream& out, const ClusterForest& f, const ClusterTree& t, int node, int indent) {
  out << std::string(static_cast<std::size_t>(2 * indent), ' ') << interval_text(f.clusters[static_cast<std::size_t>(node)]) << "\n";
  for (int child : t.children[static_cast<std::size_t>(node)]) print_subtree(out, f, t, child, indent + 1);
}

void print_order(std::ostream& out, const std::vector<int>& order) {
  out << "order:";
  for (int k : order) out << " " << k + 1;
  out << "\n";
}

int run_clusters(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg.format, {OutputFormat::text, OutputFormat::json}, "clusters");
  auto p = load_pipeline(cfg.input);
  if (cfg.format == OutputFormat::json) {
    out << to_json(p.forest, p.canon.order).dump(2) << "\n";
    return 0;
  }
  out << "d = " << p.forest.d << "\n";
  print_order(out, p.canon.order);
  if (p.forest.empty()) {
    out << "(no clusters)\n";
    return 0;
  }
  auto tree = nesting_tree(p.forest);
  for (int root : tree.roots) print_subtree(out, p.forest, tree, root, 0);
  return 0;
}

int run_present(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg.format, {OutputFormat::text, OutputFormat::json, OutputFormat::relators}, "present");
  auto p = load_pipeline(cfg.input);
  PresentationMetadata meta;
  meta.p = cfg.p.value_or(p.input.p.value_or(0));
  for (int i = 0; i < p.input.size(); ++i) meta.labels.push_back(p.input.label(i));
  meta.order = p.canon.order;
  auto pres = emit_presentation(p.forest, std::move(meta));
  switch (cfg.format) {
    case OutputFormat::json: out << to_json(pres).dump(2) << "\n"; break;
    case OutputFormat::relators:
      for (const auto& r : relators(pres)) out << r << "\n";
      break;
    default: out << render_text(pres); break;
  }
  return 0;
}

FiniteGroup load_group(const std::string& text) {
  if (text.empty()) throw UsageError("--group is required");
  if (std::filesystem::exists(text)) return parse_group_table(read_json_file(text));
  return builtin_group(text);
}

std::string tuple_text(const std::vector<int>& t) {
  std::ostringstream out;
  for (std::size_t k = 0; k < t.size(); ++k) out << (k ? " " : "") << t[k];
  return out.str();
}

std::string verdict(const OrbitReport& r) {
  if (r.all_divide()) return "all degrees divide " + std::to_string(r.exponent);
  return std::to_string(r.violations) + " classes have degree not dividing " + std::to_string(r.exponent);
}

int run_orbits(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg.format, {OutputFormat::text, OutputFormat::json, OutputFormat::csv}, "orbits");
  if (cfg.threads < 1) throw UsageError("--threads must be positive");
  auto p = load_pipeline(cfg.input);
  const std::uint64_t prime = cfg.p.value_or(p.input.p.value_or(0));
  auto group = load_group(cfg.group);
  EnumerationOptions options;
  options.surjective_only = cfg.surjective_only;
  options.max_tuples = cfg.max_tuples;
  options.threads = cfg.threads;
  auto report = moduli_report(group, monodromy_automorphism(p.forest), prime, options);
  switch (cfg.format) {
    case OutputFormat::json: {
      json doc = to_json(report);
      doc["verdict"] = verdict(report);
      out << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      out << "tuple,orbit_size,degree\n";
      for (const auto& c : report.classes) out << tuple_text(c.cover.tuple) << "," << c.cover.orbit_size << "," << c.degree << "\n";
      out << "# max degree: " << report.max_degree << "\n";
      out << "# " << verdict(report) << "\n";
      break;
    default:
      out << "group: " << report.group << " (order " << report.group_order << ", |Z| = " << report.center_size
          << ", exponent of G/Z = " << report.exponent << ")\n";
      out << "d = " << report.d << ", p = " << report.p << ", classes: " << report.classes.size() << "\n";
      for (const auto& c : report.classes) out << "  [" << tuple_text(c.cover.tuple) << "]  degree " << c.degree << "\n";
      out << "max degree: " << report.max_degree << "\n";
      out << "verdict: " << verdict(report) << "\n";
      break;
  }
  return 0;
}

int run_verify_topology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg.format, {OutputFormat::text, OutputFormat::json}, "verify-topology");
  auto family = parse_witness_family(read_json_file(cfg.input));
  if (cfg.samples) family.samples = *cfg.samples;
  if (cfg.max_refinements) family.max_refinements = *cfg.max_refinements;

  const auto separation = separation_report(family);
  const auto bound = cluster_bound_report(family);
  json doc = {{"schema_version", kSchemaVersion}, {"separation", to_json(separation)}, {"cluster_bound", to_json(bound)}};
  std::ostringstream text;
  text << "separation: " << (separation.passed() ? "pass" : "FAIL") << " (" << separation.checks << " checks)\n";
  for (const auto& v : separation.violations) text << "  " << v << "\n";
  text << "cluster bound: " << (bound.passed() ? "pass" : "FAIL") << " (" << bound.checks << " checks)\n";
  for (const auto& v : bound.violations) text << "  " << v << "\n";

  auto emit = [&] { out << (cfg.format == OutputFormat::json ? doc.dump(2) + "\n" : text.str()); };
  if (!separation.passed() || !bound.passed()) {
    emit();
    const auto& first = separation.passed() ? bound.violations.front() : separation.violations.front();
    throw Error(ErrorCode::ParametersTooLarge, first + "; shrink eta or r");
  }

  const auto oracle = monodromy_oracle(family);
  json ord = json::array();
  for (int k : oracle.tracked.order) ord.push_back(k + 1);
  json images_braid = json::array(), images_clusters = json::array();
  for (const auto& w : oracle.from_braid.images()) images_braid.push_back(to_string(w));
  for (const auto& w : oracle.from_clusters.images()) images_clusters.push_back(to_string(w));
  doc["oracle"] = {{"braid", to_string(oracle.tracked.word)},
                   {"strand_order", ord},
                   {"projection_angle", oracle.tracked.angle},
                   {"braid_action", images_braid},
                   {"cluster_monodromy", images_clusters},
                   {"agrees_up_to_inner", oracle.agrees()},
                   {"conjugator", oracle.conjugator ? json(to_string(*oracle.conjugator)) : json(nullptr)},
                   {"exact", oracle.exact}};
  text << "tracked braid: " << to_string(oracle.tracked.word) << "\n";
  text << "strand order:";
  for (int k : oracle.tracked.order) text << " " << k + 1;
  text << "\n";
  for (int i = 1; i <= family.size(); ++i) {
    text << "  x" << i << ": braid " << to_string(oracle.from_braid.image(i)) << " | clusters "
         << to_string(oracle.from_clusters.image(i)) << "\n";
  }
  if (oracle.agrees()) {
    text << "oracle: agrees up to inner automorphism by " << to_string(*oracle.conjugator)
         << (oracle.exact ? " (exact)" : "") << "\n";
  } else {
    text << "oracle: DISAGREES\n";
  }
  emit();
  if (!oracle.agrees()) {
    err << json{{"schema_version", kSchemaVersion},
                {"error", {{"code", "ORACLE_MISMATCH"}, {"message", "tracked braid and cluster monodromy differ"}}}}.dump()
        << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::clusters: return run_clusters(config, out);
      case Subcommand::present: return run_present(config, out);
      case Subcommand::orbits: return run_orbits(config, out);
      case Subcommand::verify_topology: return run_verify_topology(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << json{{"schema_version", kSchemaVersion},
                {"error", {{"code", std::string(code_name(e.code()))}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << json{{"schema_version", kSchemaVersion},
                {"error", {{"code", std::string(code_name(ErrorCode::InvalidInput))}, {"message", e.what()}}}}
               .dump()
        << "\n";
    return 1;
  }
  return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy and fundamental-group presentations from branch-point intersection data", "etalepi"};
  app.set_version_flag("--version", std::string("etalepi ") + kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format;
  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"relators", OutputFormat::relators}, {"csv", OutputFormat::csv}};

  auto add_common = [&](CLI::App* sub, const char* input_flag, const char* input_help) {
    sub->add_option(input_flag, cfg.input, input_help)->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "relators", "csv"}));
  };

  auto* clusters = app.add_subcommand("clusters", "Cluster forest of the branch points");
  add_common(clusters, "--input", "Branch-point JSON document");

  auto* present = app.add_subcommand("present", "Presentation of the prime-to-p fundamental group");
  add_common(present, "--input", "Branch-point JSON document");
  present->add_option("--p", cfg.p, "Residue characteristic recorded in the output");

  auto* orbits = app.add_subcommand("orbits", "Field-of-moduli degrees of G-cover classes");
  add_common(orbits, "--input", "Branch-point JSON document");
  orbits->add_option("--group", cfg.group, "Built-in group name (e.g. s3, 'dihedral 4') or Cayley-table JSON file")->required();
  orbits->add_option("--p", cfg.p, "Residue characteristic; must not divide |G|");
  orbits->add_flag("--surjective-only,!--no-surjective-only,!--all-tuples", cfg.surjective_only, "Only tuples generating G (default on)");
  orbits->add_option("--max-tuples", cfg.max_tuples, "Cap on |G|^(d-1)");
  orbits->add_option("--threads", cfg.threads, "Worker threads for the enumeration");

  auto* topo = app.add_subcommand("verify-topology", "Numerical checks of the separating circles and the monodromy braid");
  add_common(topo, "--family", "Witness family JSON document");
  topo->add_option("--samples", cfg.samples, "Samples along the loop");
  topo->add_option("--max-refinements", cfg.max_refinements, "Bisection depth per sample interval");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (clusters->parsed()) cfg.subcommand = Subcommand::clusters;
  else if (present->parsed()) cfg.subcommand = Subcommand::present;
  else if (orbits->parsed()) cfg.subcommand = Subcommand::orbits;
  else cfg.subcommand = Subcommand::verify_topology;
  // The cluster forest is mainly consumed by other tools, so it defaults to JSON.
  if (format.empty()) format = cfg.subcommand == Subcommand::clusters ? "json" : "text";
  cfg.format = formats.at(format);
  return run(cfg, out, err);
}

}  // namespace etalepi
