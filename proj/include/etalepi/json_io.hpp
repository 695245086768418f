#pragma once

#include <string>

#include "json.hpp"

#include "etalepi/clusters.hpp"
#include "etalepi/intersection.hpp"
#include "etalepi/monodromy.hpp"
#include "etalepi/quotients.hpp"
#include "etalepi/topocheck.hpp"

namespace etalepi {

/// Version stamped into every JSON document this library writes.
inline constexpr int kSchemaVersion = 1;

BranchInput parse_branch_input(const nlohmann::json& doc);
WitnessFamily parse_witness_family(const nlohmann::json& doc);
/// {"name": ..., "table": [[...], ...]}
FiniteGroup parse_group_table(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::string& path);

nlohmann::json to_json(const ClusterForest& forest, const std::vector<int>& order);
nlohmann::json to_json(const Presentation& p);
nlohmann::json to_json(const OrbitReport& r);
nlohmann::json to_json(const CheckReport& r);

}  // namespace etalepi
