#include "etalepi/topocheck.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "etalepi/errors.hpp"
#include "etalepi/monodromy.hpp"

namespace etalepi {

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Rational norm(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }

namespace {

std::vector<Rational> trimmed(std::vector<Rational> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::string set_text(const std::vector<int>& members) {
  std::ostringstream out;
  out << "{";
  for (std::size_t k = 0; k < members.size(); ++k) out << (k ? "," : "") << members[k] + 1;
  out << "}";
  return out.str();
}

std::string disc_text(const ClusterDisc& c) {
  return "(" + set_text(c.members) + ", " + std::to_string(c.depth) + ")";
}

double magnitude(const Rational& squared) { return std::sqrt(squared.get_d()); }

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Rational rational_power(const Rational& base, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

// Rational points of the unit circle approximating e(k / samples).
GaussianRational unit_circle_point(int k, int samples) {
  if (2 * k == samples) return {Rational(-1), Rational(0)};
  const double half_angle = std::numbers::pi * k / samples;
  const double s = std::tan(half_angle);
  Rational q(static_cast<long>(std::llround(s * 16777216.0)), 16777216L);
  q.canonicalize();
  Rational denom = 1 + q * q;
  Rational re = (1 - q * q) / denom;
  Rational im = 2 * q / denom;
  return {re, im};
}

std::complex<double> evaluate_double(const std::vector<std::complex<double>>& poly, std::complex<double> z) {
  std::complex<double> out = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out = out * z + *it;
  return out;
}

struct Ambiguous {};

class StrandTracker {
 public:
  StrandTracker(const WitnessFamily& w, const IntersectionMatrix& m, double angle)
      : w_(w), m_(m), rotation_(std::polar(1.0, -angle)),
        z0_(w.z0.re.get_d(), w.z0.im.get_d()) {
    for (const auto& p : w.polynomials) {
      std::vector<std::complex<double>> c;
      for (const auto& q : p) c.emplace_back(q.get_d(), 0.0);
      polys_.push_back(std::move(c));
    }
  }

  TrackedBraid run() {
    const int d = w_.size();
    auto start = order_at(0.0);
    if (!m_.reindexed(start).has_interval_order()) throw Ambiguous{};
    current_ = start;
    letters_.clear();
    for (int k = 0; k < w_.samples; ++k) {
      advance(static_cast<double>(k) / w_.samples, static_cast<double>(k + 1) / w_.samples, 0);
    }
    if (current_ != start) {
      throw Error(ErrorCode::UnresolvedCrossing, "tracked braid is not pure; increase the sample count");
    }
    TrackedBraid out;
    out.word = BraidWord(d, letters_);
    out.order = start;
    return out;
  }

 private:
  std::vector<std::complex<double>> positions(double t) const {
    const std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi * t) * z0_;
    std::vector<std::complex<double>> out;
    for (const auto& p : polys_) out.push_back(evaluate_double(p, z) * rotation_);
    return out;
  }

  double tolerance(const std::vector<std::complex<double>>& pos) const {
    double scale = 1.0;
    for (auto p : pos) scale = std::max(scale, std::abs(p));
    return 1e-13 * scale;
  }

  std::vector<int> order_at(double t) const {
    auto pos = positions(t);
    std::vector<int> order(pos.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return pos[static_cast<std::size_t>(a)].real() < pos[static_cast<std::size_t>(b)].real();
    });
    const double tol = tolerance(pos);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      if (pos[static_cast<std::size_t>(order[k + 1])].real() - pos[static_cast<std::size_t>(order[k])].real() <= tol) {
        throw Ambiguous{};
      }
    }
    return order;
  }

  void advance(double ta, double tb, int depth) {
    auto next = order_at(tb);
    if (next == current_) return;
    std::size_t k = 0;
    while (current_[k] == next[k]) ++k;
    const bool single_swap = k + 1 < next.size() && current_[k] == next[k + 1] && current_[k + 1] == next[k] &&
                             std::equal(current_.begin() + static_cast<long>(k + 2), current_.end(),
                                        next.begin() + static_cast<long>(k + 2));
    if (!single_swap) {
      if (depth >= w_.max_refinements) {
        throw Error(ErrorCode::UnresolvedCrossing,
                    "several crossings near t = " + std::to_string(ta) +
                        " could not be separated; increase the sample count");
      }
      const double mid = 0.5 * (ta + tb);
      advance(ta, mid, depth + 1);
      advance(mid, tb, depth + 1);
      return;
    }
    emit_crossing(k, ta, tb);
    current_ = std::move(next);
  }

  // Strand u = current_[k] moves right past v = current_[k + 1].
  void emit_crossing(std::size_t k, double lo, double hi) {
    const auto u = static_cast<std::size_t>(current_[k]);
    const auto v = static_cast<std::size_t>(current_[k + 1]);
    while (hi - lo > 1e-9) {
      const double mid = 0.5 * (lo + hi);
      auto pos = positions(mid);
      if (pos[u].real() < pos[v].real()) lo = mid;
      else hi = mid;
    }
    auto pos = positions(0.5 * (lo + hi));
    const double gap = pos[u].imag() - pos[v].imag();
    if (std::abs(gap) <= 1e3 * tolerance(pos)) throw Ambiguous{};
    const int letter = static_cast<int>(k) + 1;
    letters_.push_back(gap < 0 ? letter : -letter);
  }

  const WitnessFamily& w_;
  const IntersectionMatrix& m_;
  std::complex<double> rotation_;
  std::complex<double> z0_;
  std::vector<std::vector<std::complex<double>>> polys_;
  std::vector<int> current_;
  std::vector<int> letters_;
};

}  // namespace

void validate_family(const WitnessFamily& w) {
  if (w.size() < 2) throw Error(ErrorCode::InvalidInput, "a witness family needs at least two polynomials");
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (trimmed(w.polynomials[static_cast<std::size_t>(i)]) == trimmed(w.polynomials[static_cast<std::size_t>(j)])) {
        throw Error(ErrorCode::DuplicatePoint, "polynomials " + std::to_string(i + 1) + " and " +
                                                   std::to_string(j + 1) + " coincide");
      }
  if (w.eta < 0) throw Error(ErrorCode::InvalidInput, "eta must be nonnegative");
  if (w.r <= 0) throw Error(ErrorCode::InvalidInput, "r must be positive");
  const Rational z2 = norm(w.z0);
  if (!(w.r * w.r < 4 * z2 && z2 < w.r * w.r)) {
    throw Error(ErrorCode::InvalidInput, "z0 must satisfy r/2 < |z0| < r");
  }
  if (w.samples < 1) throw Error(ErrorCode::InvalidInput, "samples must be positive");
  if (w.max_refinements < 0) throw Error(ErrorCode::InvalidInput, "max_refinements must be nonnegative");
}

IntersectionMatrix family_matrix(const WitnessFamily& w) {
  const int d = w.size();
  IntersectionMatrix m(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const auto& a = w.polynomials[static_cast<std::size_t>(i)];
      const auto& b = w.polynomials[static_cast<std::size_t>(j)];
      const std::size_t len = std::max(a.size(), b.size());
      std::size_t k = 0;
      auto coeff = [](const std::vector<Rational>& p, std::size_t n) { return n < p.size() ? p[n] : Rational(0); };
      while (k < len && coeff(a, k) == coeff(b, k)) ++k;
      if (k == len) throw Error(ErrorCode::DuplicatePoint, "polynomials " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      m.set(i, j, static_cast<int>(k));
    }
  }
  m.validate();
  return m;
}

GaussianRational evaluate(const std::vector<Rational>& poly, const GaussianRational& z) {
  GaussianRational out{0, 0};
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) out = out * z + GaussianRational{*it, 0};
  return out;
}

std::vector<ClusterDisc> cluster_discs(const WitnessFamily& w) {
  validate_family(w);
  const auto canon = canonical_order(family_matrix(w));
  const auto forest = compute_clusters(canon.matrix);
  std::vector<ClusterDisc> out;
  for (const auto& c : forest.clusters) {
    ClusterDisc disc;
    for (int k = c.first; k <= c.last(); ++k) disc.members.push_back(canon.order[static_cast<std::size_t>(k - 1)]);
    std::sort(disc.members.begin(), disc.members.end());
    disc.depth = c.depth;
    const auto& rep = w.polynomials[static_cast<std::size_t>(disc.members.front())];
    disc.truncation.assign(rep.begin(), rep.begin() + std::min<long>(static_cast<long>(rep.size()), c.depth));
    disc.center = evaluate(disc.truncation, w.z0);
    disc.radius = rational_power(w.r, c.depth - 1) * w.eta;
    out.push_back(std::move(disc));
  }
  return out;
}

CheckReport separation_report(const WitnessFamily& w) {
  const auto discs = cluster_discs(w);
  std::vector<GaussianRational> values;
  for (const auto& p : w.polynomials) values.push_back(evaluate(p, w.z0));

  CheckReport report;
  for (const auto& disc : discs) {
    const Rational rho2 = disc.radius * disc.radius;
    for (int i = 0; i < w.size(); ++i) {
      const bool member = std::binary_search(disc.members.begin(), disc.members.end(), i);
      const Rational dist2 = norm(values[static_cast<std::size_t>(i)] - disc.center);
      ++report.checks;
      if (member && !(dist2 < rho2)) {
        report.violations.push_back("a_" + std::to_string(i + 1) + "(z0) lies outside B" + disc_text(disc) +
                                    ": distance " + std::to_string(magnitude(dist2)) + " >= radius " +
                                    std::to_string(disc.radius.get_d()));
      } else if (!member && !(dist2 > rho2)) {
        report.violations.push_back("a_" + std::to_string(i + 1) + "(z0) lies in or on B" + disc_text(disc) +
                                    ": distance " + std::to_string(magnitude(dist2)) + " <= radius " +
                                    std::to_string(disc.radius.get_d()));
      }
    }
  }
  for (std::size_t a = 0; a < discs.size(); ++a) {
    for (std::size_t b = a + 1; b < discs.size(); ++b) {
      const ClusterDisc* outer = &discs[a];
      const ClusterDisc* inner = &discs[b];
      if (is_subset(outer->members, inner->members) && outer->depth > inner->depth) std::swap(outer, inner);
      const Rational dist2 = norm(outer->center - inner->center);
      ++report.checks;
      if (is_subset(inner->members, outer->members) && outer->depth < inner->depth) {
        const Rational room = outer->radius - inner->radius;
        if (!(room > 0 && dist2 < room * room)) {
          report.violations.push_back("circle of " + disc_text(*inner) + " is not strictly inside circle of " +
                                      disc_text(*outer) + ": centre distance " + std::to_string(magnitude(dist2)) +
                                      ", radii " + std::to_string(inner->radius.get_d()) + " and " +
                                      std::to_string(outer->radius.get_d()));
        }
      } else {
        const Rational reach = outer->radius + inner->radius;
        if (!(dist2 > reach * reach)) {
          report.violations.push_back("circles of " + disc_text(discs[a]) + " and " + disc_text(discs[b]) +
                                      " are not disjoint: centre distance " + std::to_string(magnitude(dist2)) +
                                      " <= sum of radii " + std::to_string(reach.get_d()));
        }
      }
    }
  }
  return report;
}

CheckReport verify_separation(const WitnessFamily& w) {
  auto report = separation_report(w);
  if (!report.passed()) throw Error(ErrorCode::ParametersTooLarge, report.violations.front() + "; shrink eta or r");
  return report;
}

CheckReport cluster_bound_report(const WitnessFamily& w) {
  const auto discs = cluster_discs(w);
  const Rational z2 = norm(w.z0);
  CheckReport report;
  std::vector<std::size_t> first_failure(discs.size() * static_cast<std::size_t>(w.size()), 0);
  std::vector<char> failed(first_failure.size(), 0);
  for (int k = 0; k < w.samples; ++k) {
    const GaussianRational z = w.z0 * unit_circle_point(k, w.samples);
    for (std::size_t c = 0; c < discs.size(); ++c) {
      const auto& disc = discs[c];
      const Rational bound2 = rational_power(z2, disc.depth - 1) * w.eta * w.eta;
      const GaussianRational bz = evaluate(disc.truncation, z);
      for (int i : disc.members) {
        ++report.checks;
        const auto slot = c * static_cast<std::size_t>(w.size()) + static_cast<std::size_t>(i);
        if (failed[slot]) continue;
        const Rational lhs = norm(evaluate(w.polynomials[static_cast<std::size_t>(i)], z) - bz);
        if (!(lhs < bound2)) {
          failed[slot] = 1;
          report.violations.push_back("|a_" + std::to_string(i + 1) + "(z) - b" + disc_text(disc) + "(z)| = " +
                                      std::to_string(magnitude(lhs)) + " >= |z|^" + std::to_string(disc.depth - 1) +
                                      " eta = " + std::to_string(magnitude(bound2)) + " at sample " +
                                      std::to_string(k) + " of " + std::to_string(w.samples));
        }
      }
    }
  }
  return report;
}

CheckReport verify_cluster_bound(const WitnessFamily& w) {
  auto report = cluster_bound_report(w);
  if (!report.passed()) throw Error(ErrorCode::ParametersTooLarge, report.violations.front() + "; shrink eta or r");
  return report;
}

TrackedBraid track_braid(const WitnessFamily& w) {
  validate_family(w);
  const auto m = family_matrix(w);
  constexpr int kMaxAttempts = 16;
  constexpr double kAngleStep = 0.0137;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double angle = attempt * kAngleStep;
    try {
      StrandTracker tracker(w, m, angle);
      TrackedBraid out = tracker.run();
      out.angle = angle;
      out.attempts = attempt + 1;
      return out;
    } catch (const Ambiguous&) {
      continue;
    }
  }
  throw Error(ErrorCode::UnresolvedCrossing, "no projection direction gave transversal crossings");
}

OracleReport monodromy_oracle(const WitnessFamily& w) {
  OracleReport report;
  report.tracked = track_braid(w);
  const int d = w.size();
  const auto m = family_matrix(w).reindexed(report.tracked.order);
  report.from_clusters = monodromy_automorphism(compute_clusters(m));
  report.from_braid = braid_action(report.tracked.word, d);
  report.conjugator = is_inner_shift(report.from_braid, report.from_clusters);
  report.exact = report.from_braid == report.from_clusters;
  return report;
}

}  // namespace etalepi
