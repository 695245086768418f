#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etalepi/braid.hpp"
#include "etalepi/clusters.hpp"
#include "etalepi/free_group.hpp"
#include "etalepi/intersection.hpp"
#include "etalepi/rational.hpp"

namespace etalepi {

struct GaussianRational {
  Rational re;
  Rational im;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
Rational norm(const GaussianRational& z);  // |z|^2

/// Polynomial witnesses a_1..a_d evaluated on the circle t -> e(t) z0, with
/// disc parameters eta and r.
struct WitnessFamily {
  std::vector<std::vector<Rational>> polynomials;  // coefficients low to high
  Rational eta;
  Rational r;
  GaussianRational z0;
  int samples = 4096;
  int max_refinements = 20;

  int size() const { return static_cast<int>(polynomials.size()); }
};

/// Checks d >= 2, distinct polynomials, eta >= 0, r > 0, r/2 < |z0| < r and
/// samples >= 1. Throws Error(InvalidInput).
void validate_family(const WitnessFamily& w);

IntersectionMatrix family_matrix(const WitnessFamily& w);

GaussianRational evaluate(const std::vector<Rational>& poly, const GaussianRational& z);

/// Disc B_{I,n}: centre b_{I,n}(z0), radius r^{n-1} eta. Members are 0-based
/// indices into w.polynomials.
struct ClusterDisc {
  std::vector<int> members;
  int depth = 1;
  std::vector<Rational> truncation;  // b_{I,n}
  GaussianRational center;
  Rational radius;
};

std::vector<ClusterDisc> cluster_discs(const WitnessFamily& w);

struct CheckReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Circle separation and point containment, decided exactly.
CheckReport separation_report(const WitnessFamily& w);
/// Error(ParametersTooLarge) naming the first violated inequality.
CheckReport verify_separation(const WitnessFamily& w);

/// |a_i(z) - b_{I,n}(z)| < |z|^{n-1} eta at w.samples rational points of the
/// circle |z| = |z0|, decided exactly.
CheckReport cluster_bound_report(const WitnessFamily& w);
CheckReport verify_cluster_bound(const WitnessFamily& w);

struct TrackedBraid {
  BraidWord word{1};
  /// order[k] is the polynomial index of the k-th strand from the left at
  /// t = 0 in the projection used.
  std::vector<int> order;
  double angle = 0.0;  // projection direction, radians
  int attempts = 1;
};

/// Follows the points a_i(e(t) z0) for t in [0, 1] and records each swap
/// of adjacent real parts (after rotating by -angle) as b_k^{+-1}: +1 when
/// the strand moving right passes below. Error(UnresolvedCrossing) when the
/// refinement limit is hit or no projection direction works.
TrackedBraid track_braid(const WitnessFamily& w);

struct OracleReport {
  TrackedBraid tracked;
  FreeAutomorphism from_braid;
  FreeAutomorphism from_clusters;
  std::optional<FreeWord> conjugator;  // from_braid = inner(conjugator) o from_clusters
  bool exact = false;

  bool agrees() const { return conjugator.has_value(); }
};

/// Compares braid_action of the tracked braid with the cluster monodromy,
/// both in the strand labelling of the tracked projection.
OracleReport monodromy_oracle(const WitnessFamily& w);

}  // namespace etalepi
