#include "doctest.h"
#include "etalepi/braid.hpp"
#include "etalepi/errors.hpp"
#include "etalepi/monodromy.hpp"
#include "etalepi/topocheck.hpp"
#include "support.hpp"

using namespace etalepi;

namespace {

WitnessFamily family(std::vector<std::vector<const char*>> polys, const char* eta = "1/8") {
  WitnessFamily w;
  for (const auto& p : polys) {
    std::vector<Rational> c;
    for (const char* s : p) c.push_back(parse_rational(s));
    w.polynomials.push_back(c);
  }
  w.eta = parse_rational(eta);
  w.r = parse_rational("1/16");
  w.z0 = {parse_rational("3/64"), Rational(0)};
  return w;
}

// a1 = 0, a2 = x^2, a3 = x.
WitnessFamily nested3(const char* eta = "1/8") { return family({{"0"}, {"0", "0", "1"}, {"0", "1"}}, eta); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("Gaussian rational arithmetic") {
  GaussianRational a{Rational(1), Rational(2)}, b{Rational(3), Rational(-1)};
  auto p = a * b;
  CHECK(p.re == 5);
  CHECK(p.im == 5);
  CHECK(norm(a - b) == 13);
  auto v = evaluate({Rational(1), Rational(0), Rational(1)}, GaussianRational{Rational(0), Rational(1)});
  CHECK(v.re == 0);
  CHECK(v.im == 0);
}

TEST_CASE("family validation") {
  auto w = nested3();
  CHECK_NOTHROW(validate_family(w));
  w.z0 = {parse_rational("1/32"), Rational(0)};
  CHECK(code_of([&] { validate_family(w); }) == ErrorCode::InvalidInput);
  w.z0 = {parse_rational("1/16"), Rational(0)};
  CHECK(code_of([&] { validate_family(w); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { validate_family(family({{"0", "1"}, {"0", "1", "0"}})); }) == ErrorCode::DuplicatePoint);
}

TEST_CASE("family matrix and discs") {
  auto w = nested3();
  auto m = family_matrix(w);
  CHECK(m(0, 1) == 2);
  CHECK(m(0, 2) == 1);
  CHECK(m(1, 2) == 1);
  auto discs = cluster_discs(w);
  REQUIRE(discs.size() == 2);
  CHECK(discs[0].members == std::vector<int>{0, 1, 2});
  CHECK(discs[0].depth == 1);
  CHECK(discs[0].radius == parse_rational("1/8"));
  CHECK(norm(discs[0].center) == 0);
  CHECK(discs[1].members == std::vector<int>{0, 1});
  CHECK(discs[1].radius == parse_rational("1/128"));
}

TEST_CASE("separation checks") {
  CHECK(verify_separation(nested3()).passed());
  auto none = verify_separation(family({{"0"}, {"1"}}));
  CHECK(none.passed());
  CHECK(none.checks == 0);
  auto big = nested3("10");
  CHECK_FALSE(separation_report(big).passed());
  CHECK(code_of([&] { verify_separation(big); }) == ErrorCode::ParametersTooLarge);
}

TEST_CASE("cluster bound checks") {
  CHECK(verify_cluster_bound(nested3()).passed());
  // a_1 = 0 equals every truncation b_{I,n}, so its inequality holds at any eta > 0;
  // only a_2 = x^2 can fail once eta is tiny.
  auto exact = nested3("1/1000000");
  auto tiny = cluster_bound_report(exact);
  CHECK_FALSE(tiny.passed());
  for (const auto& v : tiny.violations) CHECK(v.rfind("|a_1(z)", 0) != 0);
  auto zero = nested3("0");
  auto report = cluster_bound_report(zero);
  CHECK_FALSE(report.passed());
  CHECK(code_of([&] { verify_cluster_bound(zero); }) == ErrorCode::ParametersTooLarge);
}

TEST_CASE("tracked braids") {
  auto pair = family({{"0"}, {"0", "1"}});
  auto t = track_braid(pair);
  CHECK(t.word == BraidWord(2, {1, 1}));
  CHECK(track_braid(family({{"0"}, {"1"}})).word.empty());

  auto n3 = nested3();
  auto a = track_braid(n3);
  CHECK(a.word.is_pure());
  n3.samples *= 2;
  CHECK(track_braid(n3).word == a.word);
}

TEST_CASE("unresolved crossings are reported") {
  auto w = nested3();
  w.samples = 8;
  w.max_refinements = 0;
  CHECK(code_of([&] { track_braid(w); }) == ErrorCode::UnresolvedCrossing);
}

TEST_CASE("tracked braid agrees with the cluster monodromy") {
  std::vector<WitnessFamily> families{
      nested3(),
      family({{"0"}, {"0", "1"}, {"1"}, {"1", "0", "1"}}),
      family({{"0"}, {"0", "0", "0", "1"}, {"0", "1"}, {"0", "1", "1"}}),
      family({{"0"}, {"0", "1"}}),
      family({{"0"}, {"0", "0", "1"}, {"0", "0", "0", "1"}}),
  };
  for (const auto& w : families) {
    auto report = monodromy_oracle(w);
    CHECK(report.agrees());
    CHECK(report.tracked.word.is_pure());
    auto f = compute_clusters(canonical_order(family_matrix(w)).matrix);
    if (report.tracked.order == canonical_order(family_matrix(w)).order)
      CHECK(report.from_clusters == monodromy_automorphism(f));
  }
}
