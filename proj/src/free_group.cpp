#include "etalepi/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "etalepi/errors.hpp"

namespace etalepi {

namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) out.pop_back();
  else out.push_back(letter);
}

int letter_key(int letter) { return 2 * std::abs(letter) + (letter < 0 ? 1 : 0); }

int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "malformed word '" + std::string(whole) + "'");
  bool negative = s.front() == '-';
  if (negative) s.remove_prefix(1);
  if (s.empty() || s.size() > 9) throw Error(ErrorCode::InvalidInput, "malformed word '" + std::string(whole) + "'");
  int value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::InvalidInput, "malformed word '" + std::string(whole) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) push_reduced(letters_, l);
}

FreeWord FreeWord::reduce(const std::vector<int>& letters, int rank) {
  for (int l : letters) {
    if (l == 0 || std::abs(l) > rank) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "letter " + std::to_string(l) + " outside generators 1.." + std::to_string(rank));
    }
  }
  return FreeWord(letters);
}

FreeWord FreeWord::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact == "1" || compact.empty()) return {};
  std::vector<int> letters;
  std::string_view rest = compact;
  while (!rest.empty()) {
    auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    if (factor.size() < 2 || factor.front() != 'x')
      throw Error(ErrorCode::InvalidInput, "malformed word '" + std::string(text) + "'");
    factor.remove_prefix(1);
    auto caret = factor.find('^');
    int index = parse_int(factor.substr(0, caret), text);
    int exponent = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), text);
    if (index <= 0) throw Error(ErrorCode::InvalidInput, "malformed word '" + std::string(text) + "'");
    for (int k = 0; k < std::abs(exponent); ++k) letters.push_back(exponent > 0 ? index : -index);
  }
  return FreeWord(std::move(letters));
}

int FreeWord::max_index() const {
  int best = 0;
  for (int l : letters_) best = std::max(best, std::abs(l));
  return best;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

FreeWord FreeWord::power(int k) const {
  FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out *= b;
  return out;
}

FreeWord& FreeWord::operator*=(const FreeWord& other) {
  for (int l : other.letters_) push_reduced(letters_, l);
  return *this;
}

std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  for (std::size_t k = 0; k < a.letters_.size(); ++k) {
    if (auto c = letter_key(a.letters_[k]) <=> letter_key(b.letters_[k]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const FreeWord& w, std::string_view symbol) {
  if (w.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int l : w.letters()) {
    if (!first) out << '*';
    first = false;
    out << symbol << std::abs(l);
    if (l < 0) out << "^-1";
  }
  return out.str();
}

std::optional<ConjugateForm> conjugate_of_generator(const FreeWord& w) {
  const auto& l = w.letters();
  if (l.size() % 2 == 0) return std::nullopt;
  const std::size_t half = l.size() / 2;
  for (std::size_t k = 0; k < half; ++k) {
    if (l[k] != -l[l.size() - 1 - k]) return std::nullopt;
  }
  return ConjugateForm{FreeWord(std::vector<int>(l.begin(), l.begin() + static_cast<long>(half))), l[half]};
}

FreeWord conjugate(const FreeWord& u, const FreeWord& w) { return u * w * u.inverse(); }

FreeAutomorphism::FreeAutomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {}

FreeAutomorphism FreeAutomorphism::identity(int d) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= d; ++i) images.push_back(FreeWord::generator(i));
  return FreeAutomorphism(std::move(images));
}

FreeAutomorphism FreeAutomorphism::inner(const FreeWord& g, int d) {
  std::vector<FreeWord> images;
  for (int i = 1; i <= d; ++i) images.push_back(conjugate(g, FreeWord::generator(i)));
  return FreeAutomorphism(std::move(images));
}

std::size_t FreeAutomorphism::total_length() const {
  std::size_t n = 0;
  for (const auto& w : images_) n += w.size();
  return n;
}

FreeWord apply(const FreeAutomorphism& a, const FreeWord& w) {
  if (w.max_index() > a.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "word mentions x" + std::to_string(w.max_index()) +
                                                  " but the automorphism has rank " +
                                                  std::to_string(a.rank()));
  }
  FreeWord out;
  for (int l : w.letters()) {
    const FreeWord& img = a.image(std::abs(l));
    out *= l > 0 ? img : img.inverse();
  }
  return out;
}

FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot compose automorphisms of rank " +
                                                  std::to_string(a.rank()) + " and " +
                                                  std::to_string(b.rank()));
  }
  std::vector<FreeWord> images;
  images.reserve(b.images().size());
  for (const auto& w : b.images()) images.push_back(apply(a, w));
  return FreeAutomorphism(std::move(images));
}

std::optional<FreeWord> is_inner_shift(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "automorphisms of different rank");
  }
  const int d = a.rank();
  if (d == 0) return FreeWord{};
  std::vector<ConjugateForm> fa, fb;
  std::size_t longest = 0;
  for (int i = 1; i <= d; ++i) {
    auto ca = conjugate_of_generator(a.image(i));
    auto cb = conjugate_of_generator(b.image(i));
    if (!ca || !cb) {
      throw Error(ErrorCode::UnsupportedForm,
                  "image of x" + std::to_string(i) + " is not a conjugate of a generator");
    }
    fa.push_back(*ca);
    fb.push_back(*cb);
    longest = std::max({longest, a.image(i).size(), b.image(i).size()});
  }
  if (fa[0].letter != fb[0].letter) return std::nullopt;

  // a(x_1) = g b(x_1) g^-1 forces u_a^-1 g u_b into the centralizer of the
  // core letter, which is cyclic: g = u_a x_k^t u_b^-1.
  const FreeWord core = FreeWord::generator(std::abs(fa[0].letter));
  const int bound = static_cast<int>(a.total_length() + b.total_length() + longest);
  std::optional<FreeWord> best;
  for (int t = -bound; t <= bound; ++t) {
    FreeWord g = fa[0].conjugator * core.power(t) * fb[0].conjugator.inverse();
    bool ok = true;
    for (int i = 1; i <= d && ok; ++i) ok = conjugate(g, b.image(i)) == a.image(i);
    if (ok && (!best || g < *best)) best = g;
  }
  return best;
}

}  // namespace etalepi
