#include "etalepi/intersection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "etalepi/errors.hpp"

namespace etalepi {

namespace {

std::string polynomial_label(const std::vector<Rational>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) out << (c < 0 ? "-" : "+");
    else if (c < 0) out << "-";
    first = false;
    bool unit = mag == 1;
    if (k == 0 || !unit) out << to_string(mag);
    if (k > 0) {
      if (!unit) out << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return first ? std::string("0") : out.str();
}

IntersectionMatrix padic_matrix(const BranchInput& input) {
  if (!input.p) throw Error(ErrorCode::InvalidInput, "padic mode requires p");
  const std::uint64_t p = *input.p;
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidInput, "p = " + std::to_string(p) + " is not prime");
  }
  const int d = input.size();
  for (int i = 0; i < d; ++i) {
    auto v = p_adic_valuation(input.points[static_cast<std::size_t>(i)], p);
    if (v && *v < 0) {
      throw Error(ErrorCode::NonIntegralPoint,
                  "point " + std::to_string(i + 1) + " = " + input.label(i) +
                      " has negative " + std::to_string(p) + "-adic valuation");
    }
  }
  IntersectionMatrix m(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Rational diff = input.points[static_cast<std::size_t>(i)] - input.points[static_cast<std::size_t>(j)];
      auto v = p_adic_valuation(diff, p);
      if (!v) {
        throw Error(ErrorCode::DuplicatePoint, "points " + std::to_string(i + 1) + " and " +
                                                   std::to_string(j + 1) + " coincide");
      }
      m.set(i, j, static_cast<int>(*v));
    }
  }
  return m;
}

IntersectionMatrix series_matrix(const BranchInput& input) {
  const int t = input.truncation;
  if (t < 1) throw Error(ErrorCode::InvalidInput, "series truncation must be >= 1");
  const int d = input.size();
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(input.series[static_cast<std::size_t>(i)].size()) != t) {
      throw Error(ErrorCode::InvalidInput, "series " + std::to_string(i + 1) + " has " +
                                               std::to_string(input.series[static_cast<std::size_t>(i)].size()) +
                                               " coefficients, expected " + std::to_string(t));
    }
  }
  IntersectionMatrix m(d);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const auto& a = input.series[static_cast<std::size_t>(i)];
      const auto& b = input.series[static_cast<std::size_t>(j)];
      auto it = std::mismatch(a.begin(), a.end(), b.begin()).first;
      if (it == a.end()) {
        throw Error(ErrorCode::IndistinguishableTruncation,
                    "series " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " agree through all " + std::to_string(t) +
                        " coefficients; their valuation is only bounded below");
      }
      m.set(i, j, static_cast<int>(it - a.begin()));
    }
  }
  return m;
}

// Appends a leaf order of the cluster tree below `members` to `out`;
// children are visited by smallest member.
void leaf_order(const IntersectionMatrix& m, std::vector<int> members, std::vector<int>& out) {
  if (members.size() == 1) {
    out.push_back(members.front());
    return;
  }
  int nu = m(members[0], members[1]);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) nu = std::min(nu, m(members[a], members[b]));
  }
  // Classes of "e >= nu + 1" partition `members` (ultrametric); members is
  // sorted, so classes come out ordered by their smallest element.
  std::vector<std::vector<int>> classes;
  for (int i : members) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const std::vector<int>& c) { return m(c.front(), i) > nu; });
    if (it == classes.end()) classes.push_back({i});
    else it->push_back(i);
  }
  for (auto& c : classes) leaf_order(m, std::move(c), out);
}

}  // namespace

int BranchInput::size() const {
  switch (mode) {
    case InputMode::padic: return static_cast<int>(points.size());
    case InputMode::series: return static_cast<int>(series.size());
    case InputMode::matrix: return static_cast<int>(matrix.size());
  }
  return 0;
}

std::string BranchInput::label(int i) const {
  switch (mode) {
    case InputMode::padic: return to_string(points[static_cast<std::size_t>(i)]);
    case InputMode::series: return polynomial_label(series[static_cast<std::size_t>(i)]);
    case InputMode::matrix: return std::to_string(i + 1);
  }
  return {};
}

IntersectionMatrix::IntersectionMatrix(int d) : d_(d), e_(static_cast<std::size_t>(d * d), 0) {}

void IntersectionMatrix::set(int i, int j, int value) {
  e_[static_cast<std::size_t>(i * d_ + j)] = value;
  e_[static_cast<std::size_t>(j * d_ + i)] = value;
}

IntersectionMatrix IntersectionMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int d = static_cast<int>(rows.size());
  IntersectionMatrix m(d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != d) {
      throw Error(ErrorCode::InvalidInput, "matrix row " + std::to_string(i + 1) + " has wrong length");
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      int a = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      int b = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (a != b) {
        throw Error(ErrorCode::InvalidInput, "matrix is not symmetric at (" + std::to_string(i + 1) +
                                                 ", " + std::to_string(j + 1) + ")");
      }
      if (a < 0) throw Error(ErrorCode::InvalidInput, "matrix entries must be nonnegative");
      m.set(i, j, a);
    }
  }
  m.validate();
  return m;
}

int IntersectionMatrix::max_entry() const {
  int best = 0;
  for (int i = 0; i < d_; ++i)
    for (int j = i + 1; j < d_; ++j) best = std::max(best, (*this)(i, j));
  return best;
}

IntersectionMatrix IntersectionMatrix::reindexed(const std::vector<int>& order) const {
  IntersectionMatrix out(d_);
  for (int i = 0; i < d_; ++i)
    for (int j = i + 1; j < d_; ++j)
      out.set(i, j, (*this)(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
  return out;
}

void IntersectionMatrix::validate() const {
  for (int i = 0; i < d_; ++i) {
    for (int j = i + 1; j < d_; ++j) {
      for (int k = j + 1; k < d_; ++k) {
        int a = (*this)(i, j), b = (*this)(i, k), c = (*this)(j, k);
        int lo = std::min({a, b, c});
        if ((a == lo) + (b == lo) + (c == lo) < 2) {
          throw Error(ErrorCode::UltrametricViolation,
                      "points " + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                          std::to_string(k + 1) + ": minimum " + std::to_string(lo) +
                          " of (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                          std::to_string(c) + ") is attained only once");
        }
      }
    }
  }
}

bool IntersectionMatrix::has_interval_order() const {
  for (int i = 0; i < d_; ++i)
    for (int j = i + 2; j < d_; ++j)
      if ((*this)(i, j) > (*this)(i, j - 1)) return false;
  return true;
}

std::vector<std::vector<int>> IntersectionMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(d_), std::vector<int>(static_cast<std::size_t>(d_), 0));
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if (i != j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
  return out;
}

IntersectionMatrix compute_matrix(const BranchInput& input) {
  if (input.size() < 2) throw Error(ErrorCode::InvalidInput, "at least two branch points are required");
  IntersectionMatrix m;
  switch (input.mode) {
    case InputMode::padic: m = padic_matrix(input); break;
    case InputMode::series: m = series_matrix(input); break;
    case InputMode::matrix: m = IntersectionMatrix::from_rows(input.matrix); break;
  }
  m.validate();
  return m;
}

bool CanonicalOrder::is_identity() const {
  for (std::size_t k = 0; k < order.size(); ++k)
    if (order[k] != static_cast<int>(k)) return false;
  return true;
}

CanonicalOrder canonical_order(const IntersectionMatrix& m) {
  std::vector<int> all(static_cast<std::size_t>(m.size()));
  std::iota(all.begin(), all.end(), 0);
  CanonicalOrder result;
  if (!all.empty()) leaf_order(m, all, result.order);
  result.matrix = m.reindexed(result.order);
  return result;
}

}  // namespace etalepi
