#include "etalepi/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "etalepi/errors.hpp"

namespace etalepi {

namespace {

// Images of the single generator b_k^{+-1}; only x_k and x_{k+1} move.
FreeWord letter_image(int letter, int i) {
  const int k = std::abs(letter);
  const FreeWord xk = FreeWord::generator(k);
  const FreeWord xk1 = FreeWord::generator(k + 1);
  if (letter > 0) {
    if (i == k) return conjugate(xk, xk1);
    if (i == k + 1) return xk;
  } else {
    if (i == k) return xk1;
    if (i == k + 1) return conjugate(xk1.inverse(), xk);
  }
  return FreeWord::generator(i);
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorCode::InvalidInput, "a braid needs at least one strand");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw Error(ErrorCode::IndexOutOfRange, "braid letter " + std::to_string(l) + " invalid on " +
                                                  std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out(strands_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw Error(ErrorCode::DimensionMismatch, "braids on different strand counts");
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(letters));
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> at(static_cast<std::size_t>(strands_));
  std::iota(at.begin(), at.end(), 0);
  for (int l : letters_) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(at[k], at[k + 1]);
  }
  return at;
}

bool BraidWord::is_pure() const {
  auto p = permutation();
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) return false;
  return true;
}

std::string to_string(const BraidWord& b) {
  if (b.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int l : b.letters()) {
    if (!first) out << '*';
    first = false;
    out << 'b' << std::abs(l);
    if (l < 0) out << "^-1";
  }
  return out.str();
}

FreeAutomorphism braid_action(const BraidWord& b, int d) {
  if (b.strands() != d) {
    throw Error(ErrorCode::DimensionMismatch, "braid on " + std::to_string(b.strands()) +
                                                  " strands acting on rank " + std::to_string(d));
  }
  // Track the images directly: for the word w c, substitute c's generator
  // images into the images accumulated for w.
  std::vector<FreeWord> images;
  for (int i = 1; i <= d; ++i) images.push_back(FreeWord::generator(i));
  for (int letter : b.letters()) {
    std::vector<FreeWord> step;
    for (int i = 1; i <= d; ++i) step.push_back(letter_image(letter, i));
    FreeAutomorphism c(std::move(step));
    for (auto& w : images) w = apply(c, w);
  }
  return FreeAutomorphism(std::move(images));
}

BraidWord lambda_braid(const Cluster& c, int d) {
  if (c.length < 2 || c.first < 1 || c.last() > d) {
    throw Error(ErrorCode::IntervalOutOfRange, "interval [" + std::to_string(c.first) + ", " +
                                                   std::to_string(c.last()) + "] outside 1.." +
                                                   std::to_string(d));
  }
  std::vector<int> cycle;
  for (int k = c.first; k <= c.last() - 1; ++k) cycle.push_back(k);
  return BraidWord(d, std::move(cycle)).power(c.length);
}

BraidWord puncture_loop_braid(int i, int d) {
  if (i < 1 || i > d) {
    throw Error(ErrorCode::IndexOutOfRange, "puncture " + std::to_string(i) + " outside 1.." + std::to_string(d));
  }
  std::vector<int> prefix;
  for (int k = d; k >= i + 1; --k) prefix.push_back(k);
  BraidWord p(d + 1, std::move(prefix));
  return p * BraidWord(d + 1, {i, i}) * p.inverse();
}

}  // namespace etalepi
