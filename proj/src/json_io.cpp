#include "etalepi/json_io.hpp"

#include <fstream>

#include "etalepi/errors.hpp"

namespace etalepi {

using nlohmann::json;

namespace {

Rational rational_from(const json& v) {
  if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<long long>()), 10));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::InvalidInput, "expected a rational (integer or \"a/b\" string), got " + v.dump());
}

std::vector<Rational> rational_list(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::InvalidInput, "expected an array of rationals, got " + v.dump());
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(rational_from(x));
  return out;
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::InvalidInput, std::string("missing key \"") + key + "\"");
  }
  return doc.at(key);
}

int int_from(const json& v, const char* what) {
  if (!v.is_number_integer()) throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an integer");
  return v.get<int>();
}

}  // namespace

BranchInput parse_branch_input(const json& doc) {
  BranchInput in;
  const std::string mode = require(doc, "mode").get<std::string>();
  if (doc.contains("p") && !doc.at("p").is_null()) {
    const auto& p = doc.at("p");
    if (!p.is_number_integer() || p.get<long long>() < 1) throw Error(ErrorCode::InvalidInput, "p must be a positive integer");
    in.p = p.get<std::uint64_t>();
  }
  if (mode == "padic") {
    in.mode = InputMode::padic;
    in.points = rational_list(require(doc, "points"));
  } else if (mode == "series") {
    in.mode = InputMode::series;
    for (const auto& s : require(doc, "points")) in.series.push_back(rational_list(s));
    in.truncation = int_from(require(doc, "truncation"), "truncation");
  } else if (mode == "matrix") {
    in.mode = InputMode::matrix;
    const auto& rows = require(doc, "matrix");
    if (!rows.is_array()) throw Error(ErrorCode::InvalidInput, "matrix must be an array of arrays");
    for (const auto& row : rows) {
      if (!row.is_array()) throw Error(ErrorCode::InvalidInput, "matrix must be an array of arrays");
      std::vector<int> r;
      for (const auto& v : row) r.push_back(int_from(v, "matrix entry"));
      in.matrix.push_back(std::move(r));
    }
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown mode \"" + mode + "\"");
  }
  return in;
}

WitnessFamily parse_witness_family(const json& doc) {
  WitnessFamily w;
  for (const auto& p : require(doc, "polynomials")) w.polynomials.push_back(rational_list(p));
  w.eta = rational_from(require(doc, "eta"));
  w.r = rational_from(require(doc, "r"));
  const auto z0 = rational_list(require(doc, "z0"));
  if (z0.size() != 2) throw Error(ErrorCode::InvalidInput, "z0 must be [re, im]");
  w.z0 = {z0[0], z0[1]};
  if (doc.contains("samples")) w.samples = int_from(doc.at("samples"), "samples");
  if (doc.contains("max_refinements")) w.max_refinements = int_from(doc.at("max_refinements"), "max_refinements");
  return w;
}

FiniteGroup parse_group_table(const json& doc) {
  std::vector<std::vector<int>> table;
  const auto& rows = require(doc, "table");
  if (!rows.is_array()) throw Error(ErrorCode::NotAGroup, "table must be an array of arrays");
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorCode::NotAGroup, "table must be an array of arrays");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(int_from(v, "table entry"));
    table.push_back(std::move(r));
  }
  std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : "table";
  return FiniteGroup(std::move(name), std::move(table));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

json to_json(const ClusterForest& forest, const std::vector<int>& order) {
  json clusters = json::array();
  for (const auto& c : forest.clusters) clusters.push_back({{"interval", {c.first, c.length}}, {"depth", c.depth}});
  json ord = json::array();
  for (int k : order) ord.push_back(k + 1);
  return {{"schema_version", kSchemaVersion}, {"d", forest.d}, {"order", ord}, {"clusters", clusters}};
}

json to_json(const Presentation& p) {
  json gens = json::array();
  for (int i = 1; i <= p.d; ++i) gens.push_back("x" + std::to_string(i));
  gens.push_back("delta");
  std::vector<int> all;
  for (int i = 1; i <= p.d; ++i) all.push_back(i);
  json rels = json::array();
  rels.push_back({{"lhs", to_string(FreeWord(all))}, {"rhs", "1"}});
  for (int i = 1; i <= p.d; ++i) {
    json rel = {{"lhs", "delta^-1*x" + std::to_string(i) + "*delta"},
                {"rhs", to_string(p.monodromy.image(i))},
                {"conjugator", to_string(p.conjugators[static_cast<std::size_t>(i - 1)])}};
    rel["display"] = p.is_commutator_relation(i) ? "[delta, x" + std::to_string(i) + "] = 1"
                                                 : "delta^-1*x" + std::to_string(i) + "*delta = " + p.relation_rhs(i);
    rels.push_back(std::move(rel));
  }
  json order = json::array();
  for (int k : p.metadata.order) order.push_back(k + 1);
  return {{"schema_version", kSchemaVersion},
          {"generators", gens},
          {"relations", rels},
          {"p", p.metadata.p},
          {"points", p.metadata.labels},
          {"order", order}};
}

json to_json(const OrbitReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"tuple", c.cover.tuple}, {"orbit_size", c.cover.orbit_size}, {"degree", c.degree}});
  }
  return {{"schema_version", kSchemaVersion},
          {"group", r.group},
          {"group_order", r.group_order},
          {"d", r.d},
          {"p", r.p},
          {"center_size", r.center_size},
          {"exponent", r.exponent},
          {"classes", classes},
          {"max_degree", r.max_degree},
          {"violations", r.violations},
          {"all_divide", r.all_divide()}};
}

json to_json(const CheckReport& r) {
  return {{"passed", r.passed()}, {"checks", r.checks}, {"violations", r.violations}};
}

}  // namespace etalepi
