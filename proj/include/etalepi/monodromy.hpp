#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etalepi/braid.hpp"
#include "etalepi/clusters.hpp"
#include "etalepi/free_group.hpp"

namespace etalepi {

/// x_i -> P x_i P^-1 for i in the cluster, P = x_m ... x_{m+l-1}; other
/// generators fixed.
FreeAutomorphism dehn_twist_automorphism(const Cluster& c, int d);

/// Product of the cluster twists, composed in forest order.
FreeAutomorphism monodromy_automorphism(const ClusterForest& forest);

/// Conjugators c_i with monodromy(x_i) = c_i x_i c_i^-1, accumulated twist
/// by twist so that repeated twists show up as powers, e.g. (x1 x2)^m.
std::vector<FreeWord> monodromy_conjugators(const ClusterForest& forest);

/// Concatenation of lambda_braid over the forest.
BraidWord monodromy_braid(const ClusterForest& forest);

struct PresentationMetadata {
  std::uint64_t p = 0;              // residue characteristic, 0 if unknown
  std::vector<std::string> labels;  // original point labels, input order
  std::vector<int> order;           // order[k] = input index of x_{k+1}
};

/// <x_1, ..., x_d, delta | x_1 ... x_d = 1, delta^-1 x_i delta = w_i>.
/// Relations are free-reduced only; the product relation is never used to
/// simplify the others.
struct Presentation {
  int d = 0;
  FreeAutomorphism monodromy;          // x_i -> w_i
  std::vector<FreeWord> conjugators;   // w_i = c_i x_i c_i^-1
  PresentationMetadata metadata;

  bool is_commutator_relation(int i) const { return monodromy.image(i) == FreeWord::generator(i); }

  /// Display form of the right-hand side of relation i, with the conjugator written as a power.
  std::string relation_rhs(int i) const;
};

Presentation emit_presentation(const ClusterForest& forest, PresentationMetadata metadata);

/// Multi-line human display.
std::string render_text(const Presentation& p);

/// Every relation as a single relator word (= 1), one per line, in the
/// generators x1..xd and delta.
std::vector<std::string> relators(const Presentation& p);

/// Shortest u with w = u^k (k >= 1); the identity gives (1, 0).
struct PowerForm {
  FreeWord root;
  int exponent = 0;
};
PowerForm power_form(const FreeWord& w);

}  // namespace etalepi
