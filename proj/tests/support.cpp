#include "support.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "etalepi/cli.hpp"

namespace testing {

using namespace etalepi;

std::string source_path(const std::string& relative) { return std::string(ETALEPI_SOURCE_DIR) + "/" + relative; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"etalepi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult r;
  r.status = etalepi::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

IntersectionMatrix random_ultrametric(std::mt19937& rng, int d, int depth, int alphabet) {
  auto capacity = [&] {
    long n = 1;
    for (int k = 0; k <= depth; ++k) n *= alphabet;
    return n;
  };
  while (capacity() < d) ++alphabet;
  std::uniform_int_distribution<int> digit(0, alphabet - 1);
  std::set<std::string> seen;
  std::vector<std::string> strings;
  while (static_cast<int>(strings.size()) < d) {
    std::string s;
    for (int k = 0; k <= depth; ++k) s.push_back(static_cast<char>('0' + digit(rng)));
    if (seen.insert(s).second) strings.push_back(s);
  }
  IntersectionMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      int k = 0;
      while (strings[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == strings[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]) ++k;
      m.set(i, j, k);
    }
  return m;
}

std::vector<int> brute_force_canonical_order(const IntersectionMatrix& m) {
  const int d = m.size();
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < d && ok; ++i)
      for (int j = i + 2; j < d && ok; ++j)
        if (m(order[i], order[j]) > m(order[i], order[j - 1])) ok = false;
    if (ok) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return {};
}

std::vector<Cluster> brute_force_clusters(const IntersectionMatrix& m, bool* all_intervals) {
  const int d = m.size();
  int top = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) top = std::max(top, m(i, j));
  auto close = [&](unsigned mask, int n) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) && m(i, j) < n) return false;
    return true;
  };
  if (all_intervals) *all_intervals = true;
  std::vector<Cluster> out;
  for (int n = 1; n <= top; ++n) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      if (std::popcount(mask) < 2 || !close(mask, n)) continue;
      bool maximal = true;
      for (unsigned sup = mask + 1; sup < (1u << d) && maximal; ++sup)
        if ((sup & mask) == mask && close(sup, n)) maximal = false;
      if (!maximal) continue;
      const int first = std::countr_zero(mask);
      const int count = std::popcount(mask);
      const unsigned interval = ((1u << count) - 1u) << first;
      if (interval != mask) {
        if (all_intervals) *all_intervals = false;
        continue;
      }
      out.push_back({first + 1, count, n});
    }
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    return std::tie(a.depth, a.first) < std::tie(b.depth, b.first);
  });
  return out;
}

std::vector<int> naive_reduce(std::vector<int> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
      if (letters[k] == -letters[k + 1]) {
        letters.erase(letters.begin() + static_cast<long>(k), letters.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

FreeWord naive_apply(const FreeAutomorphism& a, const FreeWord& w) {
  std::vector<int> raw;
  for (int letter : w.letters()) {
    std::vector<int> img = a.image(std::abs(letter)).letters();
    if (letter < 0) {
      std::reverse(img.begin(), img.end());
      for (int& l : img) l = -l;
    }
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return FreeWord(naive_reduce(raw));
}

std::vector<FreeWord> all_words(int rank, int max_length) {
  std::vector<FreeWord> out{FreeWord()};
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int i = 1; i <= rank; ++i)
        for (int s : {i, -i}) {
          if (!w.empty() && w.back() == -s) continue;
          auto v = w;
          v.push_back(s);
          next.push_back(v);
        }
    for (const auto& v : next) out.push_back(FreeWord(v));
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

Perm perm_inv(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return out;
}

std::vector<Perm> all_perms(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup perm_group(const std::string& name, const std::vector<Perm>& elements) {
  std::map<Perm, int> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index[elements[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) table[a][b] = index.at(perm_mul(elements[a], elements[b]));
  return FiniteGroup(name, table);
}

namespace {

bool naive_generates(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> closure{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : std::vector<int>(closure.begin(), closure.end()))
      for (int s : gens)
        if (closure.insert(g.mul(a, s)).second) grew = true;
  }
  return static_cast<int>(closure.size()) == g.order();
}

}  // namespace

std::size_t naive_class_count(const FiniteGroup& g, int d, bool surjective_only) {
  const int n = g.order();
  std::set<std::vector<int>> visited;
  std::size_t classes = 0;
  std::vector<int> prefix(static_cast<std::size_t>(d - 1), 0);
  for (;;) {
    int prod = 0;
    for (int x : prefix) prod = g.mul(prod, x);
    std::vector<int> tuple = prefix;
    tuple.push_back(g.inv(prod));
    if ((!surjective_only || naive_generates(g, tuple)) && !visited.count(tuple)) {
      ++classes;
      for (int h = 0; h < n; ++h) {
        std::vector<int> c;
        for (int x : tuple) c.push_back(g.mul(g.mul(g.inv(h), x), h));
        visited.insert(c);
      }
    }
    int k = 0;
    while (k < d - 1 && ++prefix[static_cast<std::size_t>(k)] == n) prefix[static_cast<std::size_t>(k++)] = 0;
    if (k == d - 1) break;
  }
  return classes;
}

bool simultaneously_conjugate(const FiniteGroup& g, const std::vector<int>& a, const std::vector<int>& b) {
  for (int h = 0; h < g.order(); ++h) {
    bool same = true;
    for (std::size_t k = 0; k < a.size() && same; ++k) same = g.mul(g.mul(g.inv(h), a[k]), h) == b[k];
    if (same) return true;
  }
  return false;
}

}  // namespace testing
