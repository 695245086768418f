#include "etalepi/rational.hpp"

#include <cctype>

#include "etalepi/errors.hpp"

namespace etalepi {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

long valuation_of_integer(mpz_class n, std::uint64_t p) {
  long v = 0;
  mpz_class prime(static_cast<unsigned long>(p));
  while (mpz_divisible_p(n.get_mpz_t(), prime.get_mpz_t())) {
    n /= prime;
    ++v;
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  if (den.front() == '+') den.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<long> p_adic_valuation(const Rational& q, std::uint64_t p) {
  if (q == 0) return std::nullopt;
  return valuation_of_integer(q.get_num(), p) - valuation_of_integer(q.get_den(), p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

}  // namespace etalepi
