#include "etalepi/quotients.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

#include "etalepi/errors.hpp"

namespace etalepi {

namespace {

// Cayley table of the elements produced by `elements`, closed under `op`;
// elements[0] must be the identity.
template <typename T>
std::vector<std::vector<int>> table_of(const std::vector<T>& elements, std::function<T(const T&, const T&)> op) {
  std::map<T, int> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], static_cast<int>(k));
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) table[a][b] = index.at(op(elements[a], elements[b]));
  return table;
}

using Perm = std::vector<int>;

bool is_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
  return inversions % 2 == 0;
}

std::vector<std::vector<int>> permutation_table(int n, bool even_only) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> elements;
  do {
    if (!even_only || is_even(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return table_of<Perm>(elements, [](const Perm& s, const Perm& t) {
    Perm out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) out[k] = s[static_cast<std::size_t>(t[k])];
    return out;
  });
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return t;
}

// r^k s^f stored as f * n + k.
std::vector<std::vector<int>> dihedral_table(int n) {
  const int order = 2 * n;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int a = x % n, f = x / n, b = y % n, g = y / n;
      const int k = ((a + (f ? -b : b)) % n + n) % n;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = ((f + g) % 2) * n + k;
    }
  }
  return t;
}

// Units 1, i, j, k as 0..3; element = sign * unit, stored as (sign < 0) * 4 + unit.
std::vector<std::vector<int>> quaternion_table() {
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      int s = sign[u][v] * (x >= 4 ? -1 : 1) * (y >= 4 ? -1 : 1);
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (s < 0 ? 4 : 0) + unit[u][v];
    }
  }
  return t;
}

long lcm(long a, long b) { return a / std::gcd(a, b) * b; }

int parse_count(const std::string& s, const std::string& text) {
  if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::UnknownBuiltin, "unknown group '" + text + "'");
  }
  return std::stoi(s);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), n_(static_cast<int>(table.size())) {
  if (n_ < 1) throw Error(ErrorCode::NotAGroup, "empty Cayley table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n_) throw Error(ErrorCode::NotAGroup, "Cayley table is not square");
    for (int v : row) {
      if (v < 0 || v >= n_) throw Error(ErrorCode::NotAGroup, "Cayley table entry out of range");
      table_.push_back(v);
    }
  }
  for (int a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error(ErrorCode::NotAGroup, "element 0 is not the identity");
  }
  inverse_.assign(static_cast<std::size_t>(n_), -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0) {
      throw Error(ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no inverse");
    }
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorCode::NotAGroup, "associativity fails for (" + std::to_string(a) + ", " +
                                                std::to_string(b) + ", " + std::to_string(c) + ")");
        }
}

int FiniteGroup::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int out = 0;
  for (long i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup builtin_group(const std::string& text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  std::string family, count;
  if (auto space = s.find(' '); space != std::string::npos) {
    family = s.substr(0, space);
    count = s.substr(s.find_first_not_of(' ', space) == std::string::npos ? s.size() : s.find_first_not_of(' ', space));
  } else {
    auto digit = s.find_first_of("0123456789");
    if (digit == std::string::npos) throw Error(ErrorCode::UnknownBuiltin, "unknown group '" + text + "'");
    family = s.substr(0, digit);
    count = s.substr(digit);
  }
  const int n = parse_count(count, text);
  if ((family == "cyclic" || family == "z" || family == "c") && n >= 1) {
    return FiniteGroup("cyclic " + std::to_string(n), cyclic_table(n));
  }
  if ((family == "dihedral" || family == "d") && n >= 1) {
    return FiniteGroup("dihedral " + std::to_string(n), dihedral_table(n));
  }
  if ((family == "symmetric" || family == "s") && n >= 1 && n <= 5) {
    return FiniteGroup("symmetric " + std::to_string(n), permutation_table(n, false));
  }
  if ((family == "alternating" || family == "a") && n >= 1 && n <= 5) {
    return FiniteGroup("alternating " + std::to_string(n), permutation_table(n, true));
  }
  if ((family == "quaternion" || family == "q") && n == 8) {
    return FiniteGroup("quaternion 8", quaternion_table());
  }
  throw Error(ErrorCode::UnknownBuiltin, "unknown group '" + text + "'");
}

CenterExponent center_and_exponent(const FiniteGroup& g) {
  CenterExponent out;
  const int n = g.order();
  std::vector<char> central(static_cast<std::size_t>(n), 0);
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(z, a) == g.mul(a, z);
    if (ok) {
      central[static_cast<std::size_t>(z)] = 1;
      out.center.push_back(z);
    }
  }
  for (int a = 0; a < n; ++a) {
    long k = 1;
    for (int x = a; !central[static_cast<std::size_t>(x)]; x = g.mul(x, a)) ++k;
    out.exponent = lcm(out.exponent, k);
  }
  return out;
}

std::vector<int> canonical_tuple(const FiniteGroup& g, const std::vector<int>& tuple) {
  std::vector<int> best = tuple;
  std::vector<int> conj(tuple.size());
  for (int h = 1; h < g.order(); ++h) {
    const int hi = g.inv(h);
    bool smaller = false, decided = false;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      conj[k] = g.mul(g.mul(h, tuple[k]), hi);
      if (!decided && conj[k] != best[k]) {
        decided = true;
        smaller = conj[k] < best[k];
        if (!smaller) break;
      }
    }
    if (smaller) best = conj;
  }
  return best;
}

bool generates(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> frontier{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int e : elements) {
      int y = g.mul(x, e);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count == static_cast<std::size_t>(g.order());
}

namespace {

std::size_t orbit_size(const FiniteGroup& g, const std::vector<int>& tuple) {
  std::size_t stabilizer = 0;
  for (int h = 0; h < g.order(); ++h) {
    bool fixes = true;
    for (int t : tuple) fixes = fixes && g.mul(h, t) == g.mul(t, h);
    stabilizer += fixes;
  }
  return static_cast<std::size_t>(g.order()) / stabilizer;
}

// Classes whose tuples have first entry in [lo, hi). Each class is recorded
// once, when the enumeration reaches its canonical representative.
std::vector<CoverClass> enumerate_range(const FiniteGroup& g, int d, bool surjective_only, int lo, int hi) {
  std::vector<CoverClass> out;
  const int n = g.order();
  std::vector<int> tuple(static_cast<std::size_t>(d), 0);
  const std::size_t free_slots = static_cast<std::size_t>(d - 1);
  for (int first = lo; first < hi; ++first) {
    std::fill(tuple.begin(), tuple.end(), 0);
    tuple[0] = first;
    while (true) {
      int prod = 0;
      for (std::size_t k = 0; k < free_slots; ++k) prod = g.mul(prod, tuple[k]);
      tuple[free_slots] = g.inv(prod);
      if ((!surjective_only || generates(g, tuple)) && canonical_tuple(g, tuple) == tuple) {
        out.push_back({tuple, orbit_size(g, tuple)});
      }
      std::size_t k = free_slots;
      bool done = true;
      while (k > 1) {
        --k;
        if (++tuple[k] < n) {
          done = false;
          break;
        }
        tuple[k] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

}  // namespace

std::vector<CoverClass> enumerate_classes(const FiniteGroup& g, int d, const EnumerationOptions& options) {
  if (d < 2) throw Error(ErrorCode::InvalidInput, "cover classes need d >= 2");
  std::uint64_t total = 1;
  for (int k = 0; k < d - 1; ++k) {
    total *= static_cast<std::uint64_t>(g.order());
    if (total > options.max_tuples) {
      throw Error(ErrorCode::SizeLimit, "|G|^(d-1) = " + std::to_string(g.order()) + "^" + std::to_string(d - 1) +
                                            " exceeds the cap of " + std::to_string(options.max_tuples) + " tuples");
    }
  }
  const int threads = std::clamp(options.threads, 1, g.order());
  std::vector<std::vector<CoverClass>> parts(static_cast<std::size_t>(threads));
  if (threads == 1) {
    parts[0] = enumerate_range(g, d, options.surjective_only, 0, g.order());
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      const int lo = g.order() * t / threads, hi = g.order() * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] { parts[static_cast<std::size_t>(t)] = enumerate_range(g, d, options.surjective_only, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<CoverClass> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const CoverClass& a, const CoverClass& b) { return a.tuple < b.tuple; });
  return out;
}

int evaluate(const FiniteGroup& g, const FreeWord& w, const std::vector<int>& tuple) {
  int out = 0;
  for (int l : w.letters()) {
    const auto k = static_cast<std::size_t>(std::abs(l) - 1);
    if (k >= tuple.size()) throw Error(ErrorCode::DimensionMismatch, "word uses a generator beyond the tuple");
    out = g.mul(out, l > 0 ? tuple[k] : g.inv(tuple[k]));
  }
  return out;
}

CoverClass delta_on_class(const CoverClass& c, const FreeAutomorphism& a, const FiniteGroup& g) {
  if (static_cast<std::size_t>(a.rank()) != c.tuple.size()) {
    throw Error(ErrorCode::DimensionMismatch, "automorphism rank " + std::to_string(a.rank()) +
                                                  " does not match tuple length " + std::to_string(c.tuple.size()));
  }
  std::vector<int> image;
  image.reserve(c.tuple.size());
  for (const auto& w : a.images()) image.push_back(evaluate(g, w, c.tuple));
  auto canon = canonical_tuple(g, image);
  return {canon, orbit_size(g, canon)};
}

long moduli_degree(const CoverClass& c, const FreeAutomorphism& a, const FiniteGroup& g) {
  CoverClass current = delta_on_class(c, a, g);
  long n = 1;
  while (!(current == c)) {
    current = delta_on_class(current, a, g);
    ++n;
  }
  return n;
}

void require_prime_to_p(const FiniteGroup& g, std::uint64_t p) {
  if (p > 0 && static_cast<std::uint64_t>(g.order()) % p == 0) {
    throw Error(ErrorCode::PrimeToPViolation, "p = " + std::to_string(p) + " divides |" + g.name() +
                                                  "| = " + std::to_string(g.order()));
  }
}

OrbitReport moduli_report(const FiniteGroup& g, const FreeAutomorphism& monodromy, std::uint64_t p,
                          const EnumerationOptions& options) {
  require_prime_to_p(g, p);
  OrbitReport report;
  report.group = g.name();
  report.group_order = g.order();
  report.d = monodromy.rank();
  report.p = p;
  auto ce = center_and_exponent(g);
  report.exponent = ce.exponent;
  report.center_size = ce.center.size();
  for (auto& c : enumerate_classes(g, monodromy.rank(), options)) {
    long deg = moduli_degree(c, monodromy, g);
    report.max_degree = std::max(report.max_degree, deg);
    if (report.exponent % deg != 0) ++report.violations;
    report.classes.push_back({std::move(c), deg});
  }
  return report;
}

}  // namespace etalepi
