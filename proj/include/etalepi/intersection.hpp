#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etalepi/rational.hpp"

namespace etalepi {

enum class InputMode { padic, series, matrix };

/// Branch-point data in one of three forms. Only the fields belonging to
/// `mode` are meaningful.
struct BranchInput {
  InputMode mode = InputMode::matrix;
  std::optional<std::uint64_t> p;
  std::vector<Rational> points;                 // padic
  std::vector<std::vector<Rational>> series;    // series, coefficients low to high
  int truncation = 0;                           // series
  std::vector<std::vector<int>> matrix;         // matrix

  int size() const;
  /// Human-readable label for point i (0-based), e.g. "3" or "1+x^2".
  std::string label(int i) const;
};

/// Symmetric matrix of pairwise intersection multiplicities. Indices are
/// 0-based; the diagonal is ignored.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;
  explicit IntersectionMatrix(int d);

  /// Validates symmetry, non-negativity and the two-minima rule.
  static IntersectionMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return d_; }
  int operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * d_ + j)]; }
  void set(int i, int j, int value);

  /// Largest off-diagonal entry (0 when d < 2).
  int max_entry() const;

  /// Entry (i, j) of the result is (order[i], order[j]) of this matrix.
  IntersectionMatrix reindexed(const std::vector<int>& order) const;

  /// Throws Error(UltrametricViolation) naming the first offending triple.
  void validate() const;

  /// Every row is weakly decreasing to the right of the diagonal, which is
  /// equivalent to every cluster being a contiguous interval.
  bool has_interval_order() const;

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

 private:
  int d_ = 0;
  std::vector<int> e_;
};

IntersectionMatrix compute_matrix(const BranchInput& input);

struct CanonicalOrder {
  /// order[k] is the original (0-based) index placed at position k.
  std::vector<int> order;
  IntersectionMatrix matrix;

  bool is_identity() const;
};

/// Lexicographically least reordering under which every cluster is an
/// interval.
CanonicalOrder canonical_order(const IntersectionMatrix& m);

}  // namespace etalepi
