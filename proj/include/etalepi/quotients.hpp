#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etalepi/free_group.hpp"

namespace etalepi {

/// Finite group as a Cayley table over 0..n-1 with 0 the identity.
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and associativity
  /// (Error(NotAGroup) otherwise).
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// a^k for any integer k.
  int pow(int a, long k) const;
  int element_order(int a) const;
  bool is_abelian() const;

 private:
  std::string name_;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// Built-ins: "cyclic N", "dihedral N" (order 2N), "symmetric N" (N <= 5),
/// "alternating N" (N <= 5), "quaternion 8", and the short forms zN, cN,
/// dN (order 2N), sN, aN, q8. Error(UnknownBuiltin) otherwise.
FiniteGroup builtin_group(const std::string& text);

struct CenterExponent {
  std::vector<int> center;
  /// Exponent of G/Z(G): lcm over g of the least k with g^k central.
  long exponent = 1;
};
CenterExponent center_and_exponent(const FiniteGroup& g);

/// A d-tuple with product 1, identified up to simultaneous conjugation. The
/// stored tuple is the lexicographically least member of the orbit.
struct CoverClass {
  std::vector<int> tuple;
  /// Number of tuples in the conjugation orbit.
  std::size_t orbit_size = 0;

  friend bool operator==(const CoverClass& a, const CoverClass& b) { return a.tuple == b.tuple; }
};

struct EnumerationOptions {
  bool surjective_only = true;
  std::uint64_t max_tuples = 10'000'000;
  int threads = 1;
};

std::vector<int> canonical_tuple(const FiniteGroup& g, const std::vector<int>& tuple);
bool generates(const FiniteGroup& g, const std::vector<int>& elements);

/// All classes, sorted by representative. Error(SizeLimit) if
/// |G|^(d-1) > options.max_tuples.
std::vector<CoverClass> enumerate_classes(const FiniteGroup& g, int d, const EnumerationOptions& options = {});

/// Evaluates w at x_i -> tuple[i-1].
int evaluate(const FiniteGroup& g, const FreeWord& w, const std::vector<int>& tuple);

/// Class of (a(x_1), ..., a(x_d)) evaluated at the representative.
CoverClass delta_on_class(const CoverClass& c, const FreeAutomorphism& a, const FiniteGroup& g);

/// Least N >= 1 with delta^N fixing the class.
long moduli_degree(const CoverClass& c, const FreeAutomorphism& a, const FiniteGroup& g);

/// Error(PrimeToPViolation) when p > 0 divides |G|.
void require_prime_to_p(const FiniteGroup& g, std::uint64_t p);

struct ClassDegree {
  CoverClass cover;
  long degree = 1;
};

/// Brute-force check that every class's moduli degree divides the exponent
/// of G/Z(G).
struct OrbitReport {
  std::string group;
  int group_order = 0;
  int d = 0;
  std::uint64_t p = 0;
  long exponent = 1;        // of G/Z(G)
  std::size_t center_size = 0;
  std::vector<ClassDegree> classes;
  long max_degree = 1;
  std::size_t violations = 0;

  bool all_divide() const { return violations == 0; }
};

OrbitReport moduli_report(const FiniteGroup& g, const FreeAutomorphism& monodromy, std::uint64_t p,
                          const EnumerationOptions& options = {});

}  // namespace etalepi
