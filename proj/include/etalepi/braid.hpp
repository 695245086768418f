#pragma once

#include <string>
#include <vector>

#include "etalepi/clusters.hpp"
#include "etalepi/free_group.hpp"

namespace etalepi {

/// Word in the Artin generators b_1, ..., b_{strands-1}; +k is b_k and -k
/// its inverse. Not reduced: letters are kept as written.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord power(int k) const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);

  /// Strand permutation: result[k] is the starting position of the strand
  /// ending at position k (0-based).
  std::vector<int> permutation() const;
  bool is_pure() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// `b1*b2^-1`, empty braid as `1`.
std::string to_string(const BraidWord& b);

/// Automorphism x -> b^-1 x b of the free group on the d punctures, with
///   b_k^-1 x_{k+1} b_k = x_k,   b_k^-1 x_k b_k = x_k x_{k+1} x_k^-1.
/// Conjugation on the right reverses products: the automorphism of b c is
/// that of c applied after that of b, so the leftmost letter acts first on
/// a generator and later letters substitute into the result.
FreeAutomorphism braid_action(const BraidWord& b, int d);

/// (b_m ... b_{m+l-2})^l: the full twist of the strands in the cluster.
BraidWord lambda_braid(const Cluster& c, int d);

/// The loop x_i as a braid on d+1 strands:
/// (b_d ... b_{i+1}) b_i^2 (b_d ... b_{i+1})^-1.
BraidWord puncture_loop_braid(int i, int d);

}  // namespace etalepi
