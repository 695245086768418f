#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace etalepi {

using Rational = mpq_class;

/// Parses "a/b", "-a/b" or an integer literal. Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

/// Canonical "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rational& q);

/// v_p(q). Absent for q == 0 (infinite valuation).
std::optional<long> p_adic_valuation(const Rational& q, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace etalepi
