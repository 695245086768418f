// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "etalepi/braid.hpp"
#include "etalepi/monodromy.hpp"
#include "etalepi/quotients.hpp"
#include "etalepi/topocheck.hpp"
#include "json.hpp"
#include "etalepi/json_io.hpp"
#include "support.hpp"

using namespace etalepi;
using testing::source_path;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && failures_.size() < 5) failures_.push_back(what);
    if (!cond) ok_ = false;
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.ok = ok_;
    o.detail = summary;
    for (const auto& f : failures_) o.detail += "; " + f;
    return o;
  }
  int count() const { return count_; }

 private:
  bool ok_ = true;
  int count_ = 0;
  std::vector<std::string> failures_;
};

FreeWord full_product(int d) {
  std::vector<int> all;
  for (int i = 1; i <= d; ++i) all.push_back(i);
  return FreeWord(all);
}

std::string expected_display(std::uint64_t p, const std::vector<std::string>& labels, int m) {
  std::ostringstream out;
  out << "residue characteristic: " << p << "\npunctures: ";
  for (std::size_t k = 0; k < labels.size(); ++k) out << (k ? ", " : "") << "x" << k + 1 << " -> " << labels[k];
  out << "\ngenerators: ";
  for (std::size_t k = 0; k < labels.size(); ++k) out << "x" << k + 1 << ", ";
  out << "delta\nrelations:\n  ";
  for (std::size_t k = 0; k < labels.size(); ++k) out << (k ? "*" : "") << "x" << k + 1;
  out << " = 1\n";
  for (std::size_t k = 1; k <= labels.size(); ++k) {
    if (m > 0 && k <= 2) {
      const std::string e = m == 1 ? "" : "^" + std::to_string(m);
      out << "  delta^-1*x" << k << "*delta = (x1*x2)" << e << "*x" << k << "*(x1*x2)^-" << m << "\n";
    } else {
      out << "  [delta, x" << k << "] = 1\n";
    }
  }
  return out.str();
}

Outcome ac1() {
  Check c;
  auto r = testing::run_cli({"present", "--input", source_path("data/example1.json")});
  c.expect(r.status == 0, "exit status");
  c.expect(r.out == expected_display(5, {"0", "1", "2", "3"}, 0), "display differs");
  c.expect(r.out == testing::read_file(source_path("tests/golden/example1.txt")), "golden differs");
  return c.outcome("points {0,1,2,3}, p=5");
}

Outcome ac2() {
  Check c;
  for (std::uint64_t p : {3, 5})
    for (int m = 1; m <= 3; ++m) {
      const std::string name = "example2_p" + std::to_string(p) + "_m" + std::to_string(m);
      auto r = testing::run_cli({"present", "--input", source_path("data/" + name + ".json")});
      std::uint64_t pm = 1;
      for (int k = 0; k < m; ++k) pm *= p;
      c.expect(r.status == 0, name + " exit status");
      c.expect(r.out == expected_display(p, {"0", std::to_string(pm), "1", "2"}, m), name + " display differs");
      c.expect(r.out == testing::read_file(source_path("tests/golden/" + name + ".txt")), name + " golden differs");
      // The relation words themselves, independently of rendering.
      auto in = parse_branch_input(read_json_file(source_path("data/" + name + ".json")));
      auto a = monodromy_automorphism(compute_clusters(canonical_order(compute_matrix(in)).matrix));
      const FreeWord y = FreeWord::parse("x1*x2").power(m);
      for (int i = 1; i <= 4; ++i) {
        const FreeWord x = FreeWord::generator(i);
        c.expect(a.image(i) == (i <= 2 ? y * x * y.inverse() : x), name + " image of x" + std::to_string(i));
      }
    }
  return c.outcome("p in {3,5}, m in {1,2,3}");
}

Outcome ac3() {
  Check c;
  for (int d = 2; d <= 6; ++d)
    for (int l = 2; l <= std::min(d, 5); ++l)
      for (int m = 1; m + l - 1 <= d; ++m)
        for (int n = 1; n <= 3; ++n) {
          Cluster cl{m, l, n};
          c.expect(braid_action(lambda_braid(cl, d), d) == dehn_twist_automorphism(cl, d),
                   "d=" + std::to_string(d) + " m=" + std::to_string(m) + " l=" + std::to_string(l));
        }
  return c.outcome(std::to_string(c.count()) + " interval/depth cases");
}

Outcome ac4() {
  Check c;
  for (int d = 2; d <= 7; ++d)
    for (int i = 1; i < d; ++i)
      for (int j = 1; j < d; ++j) {
        if (std::abs(i - j) >= 2)
          c.expect(braid_action(BraidWord(d, {i, j}), d) == braid_action(BraidWord(d, {j, i}), d), "far commutation");
        if (j == i + 1)
          c.expect(braid_action(BraidWord(d, {i, j, i}), d) == braid_action(BraidWord(d, {j, i, j}), d), "braid relation");
      }
  return c.outcome(std::to_string(c.count()) + " relations, d <= 7");
}

Outcome ac5() {
  Check c;
  std::mt19937 rng(20260101);
  int permuted = 0;
  const int trials = 1200;
  for (int trial = 0; trial < trials; ++trial) {
    const int d = 2 + trial % 5;
    const int depth = 1 + (trial / 5) % 4;
    auto m = canonical_order(testing::random_ultrametric(rng, d, depth, 2 + trial % 3)).matrix;
    auto f = compute_clusters(m);
    auto a = monodromy_automorphism(f);
    c.expect(apply(a, full_product(d)) == full_product(d), "product not fixed");
    for (int i = 1; i <= d; ++i) {
      auto form = conjugate_of_generator(a.image(i));
      c.expect(form && form->letter == i, "image is not a conjugate of its generator");
    }
    if (f.clusters.size() <= 4) {
      auto order = f.clusters;
      std::sort(order.begin(), order.end());
      do {
        FreeAutomorphism b = FreeAutomorphism::identity(d);
        for (const auto& cl : order) b = compose(b, dehn_twist_automorphism(cl, d));
        c.expect(b == a, "twist order matters");
        ++permuted;
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return c.outcome(std::to_string(trials) + " random matrices, " + std::to_string(permuted) + " twist orders");
}

Outcome ac6() {
  Check c;
  // Distinct cluster forests for d = 3 and 4 from random digit strings.
  std::mt19937 rng(4242);
  std::map<std::pair<int, std::vector<std::tuple<int, int, int>>>, ClusterForest> configs;
  for (int trial = 0; trial < 4000 && configs.size() < 30; ++trial) {
    const int d = 3 + trial % 2;
    auto f = compute_clusters(canonical_order(testing::random_ultrametric(rng, d, 3, 2)).matrix);
    std::vector<std::tuple<int, int, int>> key;
    for (const auto& cl : f.clusters) key.emplace_back(cl.first, cl.length, cl.depth);
    configs.emplace(std::make_pair(d, key), f);
  }
  c.expect(configs.size() >= 20, "fewer than 20 configurations");

  const std::vector<std::string> groups{"z2", "z3", "z4", "z5", "z6", "z7", "z8", "s3", "d4", "q8", "a4", "s4"};
  std::size_t classes = 0, runs = 0;
  for (const auto& name : groups) {
    auto g = builtin_group(name);
    std::uint64_t p = 2;
    while (g.order() % static_cast<int>(p) == 0 || !is_prime(p)) ++p;
    const long exponent = center_and_exponent(g).exponent;
    for (const auto& [key, forest] : configs) {
      auto report = moduli_report(g, monodromy_automorphism(forest), p);
      ++runs;
      classes += report.classes.size();
      c.expect(report.violations == 0, name + " has a degree not dividing " + std::to_string(exponent));
      for (const auto& cd : report.classes) c.expect(exponent % cd.degree == 0, name + " divisibility");
    }
  }
  return c.outcome(std::to_string(configs.size()) + " configurations x " + std::to_string(groups.size()) +
                   " groups, " + std::to_string(classes) + " classes over " + std::to_string(runs) + " runs");
}

Outcome ac7_family(const std::string& file, double* seconds) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  auto w = parse_witness_family(read_json_file(source_path("data/" + file)));
  c.expect(separation_report(w).passed(), "separation");
  c.expect(cluster_bound_report(w).passed(), "cluster bound");
  auto oracle = monodromy_oracle(w);
  c.expect(oracle.agrees(), "tracked braid disagrees with clusters");
  c.expect(oracle.tracked.word.is_pure(), "tracked braid not pure");
  *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c.outcome(file + " braid " + to_string(oracle.tracked.word));
}

Outcome ac8() {
  Check c;
  struct Case {
    std::vector<std::string> args;
    std::string code;
  };
  auto fx = [](const std::string& n) { return source_path("tests/fixtures/" + n); };
  auto dt = [](const std::string& n) { return source_path("data/" + n); };
  const std::vector<Case> cases{
      {{"clusters", "--input", fx("non_ultrametric.json")}, "ULTRAMETRIC_VIOLATION"},
      {{"present", "--input", fx("indistinguishable_truncation.json")}, "INDISTINGUISHABLE_TRUNCATION"},
      {{"orbits", "--group", fx("broken_cayley_table.json"), "--input", dt("example2.json")}, "NOT_A_GROUP"},
      {{"orbits", "--group", "s3", "--input", dt("example2_p3_m1.json")}, "PRIME_TO_P_VIOLATION"},
      {{"verify-topology", "--family", fx("oversized_eta.json")}, "PARAMETERS_TOO_LARGE"},
      {{"verify-topology", "--family", fx("unresolved_crossing.json")}, "UNRESOLVED_CROSSING"},
      {{"orbits", "--group", "s4", "--input", dt("example2.json"), "--max-tuples", "1000"}, "SIZE_LIMIT"},
  };
  std::set<std::string> seen;
  for (const auto& k : cases) {
    auto r = testing::run_cli(k.args);
    std::string code;
    try {
      code = nlohmann::json::parse(r.err)["error"]["code"].get<std::string>();
    } catch (const std::exception&) {
    }
    c.expect(r.status == 1 && code == k.code, k.code + " not produced (got '" + code + "')");
    if (code == k.code) seen.insert(code);
  }
  return c.outcome(std::to_string(seen.size()) + "/" + std::to_string(cases.size()) + " error codes triggered");
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](const std::string& id, double limit, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.ok && secs < limit;
    all = all && ok;
    std::cout << id << " " << (ok ? "PASS" : "FAIL") << " (" << secs << " s, limit " << limit << " s) " << o.detail
              << std::endl;
  };

  report("AC1 trivial-monodromy presentation", 1, ac1);
  report("AC2 depth-m pair presentations", 1, ac2);
  report("AC3 lambda braids equal Dehn twists", 10, ac3);
  report("AC4 braid relations", 5, ac4);
  report("AC5 structural invariants", 60, ac5);
  report("AC6 moduli degrees divide exp(G/Z)", 600, ac6);
  for (const char* fam : {"witness_nested3.json", "witness_two_pairs.json", "witness_depth3.json", "witness_pair.json"}) {
    report(std::string("AC7 braid oracle ") + fam, 60, [&] {
      double s = 0;
      return ac7_family(fam, &s);
    });
  }
  report("AC8 error codes", 60, ac8);
  return all ? 0 : 1;
}
