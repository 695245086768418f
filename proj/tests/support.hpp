#pragma once

#include <random>
#include <string>
#include <vector>

#include "etalepi/braid.hpp"
#include "etalepi/clusters.hpp"
#include "etalepi/free_group.hpp"
#include "etalepi/intersection.hpp"
#include "etalepi/monodromy.hpp"
#include "etalepi/quotients.hpp"

namespace testing {

std::string source_path(const std::string& relative);
std::string read_file(const std::string& path);

// Runs the CLI in-process; returns the exit status.
struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};
CliResult run_cli(const std::vector<std::string>& args);

// Ultrametric matrix from random digit strings: e(i,j) is the common prefix length.
// Strings have length depth+1 and are pairwise distinct, so entries stay <= depth.
etalepi::IntersectionMatrix random_ultrametric(std::mt19937& rng, int d, int depth, int alphabet = 3);

// Lexicographically least order whose reindexed matrix has every row weakly
// decreasing to the right of the diagonal, by trying all d! orders.
std::vector<int> brute_force_canonical_order(const etalepi::IntersectionMatrix& m);

// Every (subset, depth) with |I| >= 2, all pairwise entries >= n and I maximal.
// Subsets that are not intervals are reported through `all_intervals`.
std::vector<etalepi::Cluster> brute_force_clusters(const etalepi::IntersectionMatrix& m, bool* all_intervals = nullptr);

// Letter-list reduction by repeated pair deletion.
std::vector<int> naive_reduce(std::vector<int> letters);

// Substitution oracle for automorphism application.
etalepi::FreeWord naive_apply(const etalepi::FreeAutomorphism& a, const etalepi::FreeWord& w);

// All reduced words of length <= max_length on `rank` generators, in (length, lex) order.
std::vector<etalepi::FreeWord> all_words(int rank, int max_length);

// Permutation model of S_n: elements are images of 0..n-1, product (a*b)(x) = a(b(x)).
using Perm = std::vector<int>;
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
std::vector<Perm> all_perms(int n);
// Cayley table of a list of permutations closed under products, identity first.
etalepi::FiniteGroup perm_group(const std::string& name, const std::vector<Perm>& elements);

// Naive class count: tuples with product one, generation tested by closure,
// orbits under simultaneous conjugation merged by a visited set.
std::size_t naive_class_count(const etalepi::FiniteGroup& g, int d, bool surjective_only);

// Whether two tuples are simultaneously conjugate, by trying every element.
bool simultaneously_conjugate(const etalepi::FiniteGroup& g, const std::vector<int>& a, const std::vector<int>& b);

}  // namespace testing
