#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace etalepi {

/// Freely reduced word in x_1, ..., x_d. A letter is a signed generator
/// index: +i is x_i, -i is x_i^-1. Every constructor reduces.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);

  static FreeWord generator(int i) { return FreeWord({i}); }

  /// Reduces `letters`, rejecting indices outside 1..rank.
  static FreeWord reduce(const std::vector<int>& letters, int rank);

  /// Parses `x1*x2^-1*x1`, `x1^3` or `1` (identity). Throws Error(InvalidInput).
  static FreeWord parse(std::string_view text);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int max_index() const;

  FreeWord inverse() const;
  FreeWord power(int k) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  FreeWord& operator*=(const FreeWord& other);

  /// Length first, then letters (with x_i < x_i^-1 < x_{i+1}).
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord& a, const FreeWord& b) = default;

 private:
  std::vector<int> letters_;
};

/// Canonical text: `x1*x2^-1*x1`, identity as `1`. Runs of a letter are
/// written out, never collapsed into powers.
std::string to_string(const FreeWord& w, std::string_view symbol = "x");

/// If w = u * x_k^s * u^-1 with s = +-1, returns (u, +-k).
struct ConjugateForm {
  FreeWord conjugator;
  int letter = 0;
};
std::optional<ConjugateForm> conjugate_of_generator(const FreeWord& w);

/// u * w * u^-1.
FreeWord conjugate(const FreeWord& u, const FreeWord& w);

/// Endomorphism of the free group of rank d, given by generator images.
class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;
  explicit FreeAutomorphism(std::vector<FreeWord> images);

  static FreeAutomorphism identity(int d);
  /// w -> g * w * g^-1.
  static FreeAutomorphism inner(const FreeWord& g, int d);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<FreeWord>& images() const { return images_; }
  std::size_t total_length() const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// Substitutes images for letters and reduces. Throws DimensionMismatch if
/// w mentions a generator beyond a.rank().
FreeWord apply(const FreeAutomorphism& a, const FreeWord& w);

/// a after b: x_i -> a(b(x_i)).
FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b);

/// Finds g with a(x_i) = g b(x_i) g^-1 for every i, shortest first and then
/// lexicographically least. Requires every image of a and b to be a
/// conjugate of a generator (Error(UnsupportedForm) otherwise).
std::optional<FreeWord> is_inner_shift(const FreeAutomorphism& a, const FreeAutomorphism& b);

}  // namespace etalepi
