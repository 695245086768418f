#include "etalepi/monodromy.hpp"

#include <sstream>

#include "etalepi/errors.hpp"

namespace etalepi {

namespace {

void check_interval(const Cluster& c, int d) {
  if (c.length < 1 || c.first < 1 || c.last() > d) {
    throw Error(ErrorCode::IntervalOutOfRange, "interval [" + std::to_string(c.first) + ", " +
                                                   std::to_string(c.last()) + "] outside 1.." +
                                                   std::to_string(d));
  }
}

FreeWord interval_product(const Cluster& c) {
  std::vector<int> letters;
  for (int i = c.first; i <= c.last(); ++i) letters.push_back(i);
  return FreeWord(std::move(letters));
}

std::string render_power(const FreeWord& root, int exponent) {
  const bool single = root.size() == 1;
  std::string base = single ? to_string(root) : "(" + to_string(root) + ")";
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

std::string lhs_text(int i) { return "delta^-1*x" + std::to_string(i) + "*delta"; }

std::string product_text(int d) {
  std::vector<int> letters;
  for (int i = 1; i <= d; ++i) letters.push_back(i);
  return to_string(FreeWord(std::move(letters)));
}

}  // namespace

FreeAutomorphism dehn_twist_automorphism(const Cluster& c, int d) {
  check_interval(c, d);
  const FreeWord p = interval_product(c);
  std::vector<FreeWord> images;
  for (int i = 1; i <= d; ++i) {
    FreeWord x = FreeWord::generator(i);
    images.push_back(c.contains(i) ? conjugate(p, x) : x);
  }
  return FreeAutomorphism(std::move(images));
}

FreeAutomorphism monodromy_automorphism(const ClusterForest& forest) {
  FreeAutomorphism result = FreeAutomorphism::identity(forest.d);
  for (const auto& c : forest.clusters) result = compose(result, dehn_twist_automorphism(c, forest.d));
  return result;
}

std::vector<FreeWord> monodromy_conjugators(const ClusterForest& forest) {
  // For a = T o b with b(x_i) = u x_i u^-1 and T(x_i) = v_i x_i v_i^-1,
  // a(x_i) = T(u) v_i x_i v_i^-1 T(u)^-1. Build the product right to left.
  const int d = forest.d;
  std::vector<FreeWord> conj(static_cast<std::size_t>(d));
  for (auto it = forest.clusters.rbegin(); it != forest.clusters.rend(); ++it) {
    check_interval(*it, d);
    const FreeAutomorphism twist = dehn_twist_automorphism(*it, d);
    const FreeWord p = interval_product(*it);
    for (int i = 1; i <= d; ++i) {
      auto& c = conj[static_cast<std::size_t>(i - 1)];
      c = apply(twist, c) * (it->contains(i) ? p : FreeWord{});
    }
  }
  return conj;
}

BraidWord monodromy_braid(const ClusterForest& forest) {
  BraidWord b(std::max(forest.d, 1));
  for (const auto& c : forest.clusters) b = b * lambda_braid(c, forest.d);
  return b;
}

PowerForm power_form(const FreeWord& w) {
  const auto& l = w.letters();
  const std::size_t n = l.size();
  if (n == 0) return {FreeWord{}, 0};
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (std::size_t k = period; k < n && ok; ++k) ok = l[k] == l[k - period];
    if (ok) {
      return {FreeWord(std::vector<int>(l.begin(), l.begin() + static_cast<long>(period))),
              static_cast<int>(n / period)};
    }
  }
  return {w, 1};
}

std::string Presentation::relation_rhs(int i) const {
  const FreeWord& c = conjugators[static_cast<std::size_t>(i - 1)];
  const std::string x = "x" + std::to_string(i);
  if (c.empty()) return x;
  PowerForm pf = power_form(c);
  return render_power(pf.root, pf.exponent) + "*" + x + "*" + render_power(pf.root, -pf.exponent);
}

Presentation emit_presentation(const ClusterForest& forest, PresentationMetadata metadata) {
  Presentation p;
  p.d = forest.d;
  p.monodromy = monodromy_automorphism(forest);
  p.conjugators = monodromy_conjugators(forest);
  p.metadata = std::move(metadata);
  return p;
}

std::string render_text(const Presentation& p) {
  std::ostringstream out;
  out << "residue characteristic: " << p.metadata.p << "\n";
  if (!p.metadata.order.empty()) {
    out << "punctures:";
    for (int k = 0; k < p.d; ++k) {
      const int src = p.metadata.order[static_cast<std::size_t>(k)];
      out << (k ? ", " : " ") << "x" << k + 1 << " -> "
          << (static_cast<std::size_t>(src) < p.metadata.labels.size()
                  ? p.metadata.labels[static_cast<std::size_t>(src)]
                  : std::to_string(src + 1));
    }
    out << "\n";
  }
  out << "generators:";
  for (int i = 1; i <= p.d; ++i) out << " x" << i << ",";
  out << " delta\n";
  out << "relations:\n";
  out << "  " << product_text(p.d) << " = 1\n";
  for (int i = 1; i <= p.d; ++i) {
    if (p.is_commutator_relation(i)) out << "  [delta, x" << i << "] = 1\n";
    else out << "  " << lhs_text(i) << " = " << p.relation_rhs(i) << "\n";
  }
  return out.str();
}

std::vector<std::string> relators(const Presentation& p) {
  std::vector<std::string> out{product_text(p.d)};
  for (int i = 1; i <= p.d; ++i) {
    std::string tail = to_string(p.monodromy.image(i).inverse());
    out.push_back(lhs_text(i) + "*" + tail);
  }
  return out;
}

}  // namespace etalepi
