#include "quintic/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quintic {

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << i;
    if (e[i] > 1) os << "^" << e[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

OneParamSubgroup::OneParamSubgroup(std::array<std::int64_t, 4> w) : a(w) {
  if (a[0] + a[1] + a[2] + a[3] != 0)
    throw std::invalid_argument("one-parameter subgroup weights must sum to zero");
  if (a == std::array<std::int64_t, 4>{0, 0, 0, 0})
    throw std::invalid_argument("one-parameter subgroup must be nonzero");
}

OneParamSubgroup OneParamSubgroup::normalize() const {
  std::array<std::int64_t, 4> w = a;
  std::sort(w.begin(), w.end(), std::greater<>());
  std::int64_t g = 0;
  for (auto v : w) g = std::gcd(g, v < 0 ? -v : v);
  for (auto& v : w) v /= g;  // g > 0: the zero vector is rejected on construction
  OneParamSubgroup out(w);
  out.normalized = true;
  return out;
}

bool OneParamSubgroup::is_sorted_primitive() const {
  std::int64_t g = 0;
  for (int i = 0; i < 4; ++i) {
    if (i + 1 < 4 && a[i] < a[i + 1]) return false;
    g = std::gcd(g, a[i] < 0 ? -a[i] : a[i]);
  }
  return g == 1;
}

std::string OneParamSubgroup::str() const {
  std::ostringstream os;
  os << "(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ")";
  return os.str();
}

MonomialConfiguration MonomialConfiguration::from_monomials(int degree,
                                                            std::vector<Monomial> ms) {
  if (degree < 1) throw std::invalid_argument("configuration degree must be >= 1");
  if (ms.empty()) throw std::invalid_argument("configuration support must be non-empty");
  for (const auto& m : ms) {
    for (int i = 0; i < 4; ++i)
      if (m.e[i] < 0) throw std::invalid_argument("negative exponent in " + m.str());
    if (m.degree() != degree)
      throw std::invalid_argument("monomial " + m.str() + " does not have degree " +
                                  std::to_string(degree));
  }
  std::sort(ms.begin(), ms.end(), [](const Monomial& x, const Monomial& y) { return y < x; });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  MonomialConfiguration cfg;
  cfg.degree = degree;
  cfg.support = std::move(ms);
  return cfg;
}

bool MonomialConfiguration::contains(const Monomial& m) const {
  return std::binary_search(support.begin(), support.end(), m,
                            [](const Monomial& x, const Monomial& y) { return y < x; });
}

std::vector<Monomial> enumerate_monomials(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>((d + 1) * (d + 2) * (d + 3) / 6));
  for (int i0 = d; i0 >= 0; --i0)
    for (int i1 = d - i0; i1 >= 0; --i1)
      for (int i2 = d - i0 - i1; i2 >= 0; --i2)
        out.push_back(Monomial{{i0, i1, i2, d - i0 - i1 - i2}});
  return out;
}

std::int64_t weight_pairing(const OneParamSubgroup& lambda, const Monomial& m) {
  std::int64_t s = 0;
  for (int i = 0; i < 4; ++i) s += lambda.a[i] * m.e[i];
  return s;
}

Rational weight_pairing(const OneParamSubgroup& lambda, const std::array<Rational, 4>& p) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) s += Rational(static_cast<long>(lambda.a[i])) * p[i];
  s.canonicalize();  // p may carry unreduced entries
  return s;
}

std::array<Rational, 4> centroid(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  Rational q(d, 4);
  q.canonicalize();
  return {q, q, q, q};
}

bool monomial_dominates(const Monomial& m, const Monomial& m2) {
  if (m.degree() != m2.degree())
    throw std::invalid_argument("dominance compares monomials of equal degree");
  int prefix = 0;
  for (int i = 0; i < 3; ++i) {
    prefix += m.e[i] - m2.e[i];
    if (prefix < 0) return false;
  }
  return true;
}

static MonomialConfiguration filter_by_weight(const OneParamSubgroup& lambda, int d,
                                              bool zero_only) {
  std::vector<Monomial> kept;
  for (const auto& m : enumerate_monomials(d)) {
    std::int64_t w = weight_pairing(lambda, m);
    if (zero_only ? (w == 0) : (w >= 0)) kept.push_back(m);
  }
  if (kept.empty())
    throw std::invalid_argument("no monomials of degree " + std::to_string(d) +
                                " with required weight under " + lambda.str());
  return MonomialConfiguration::from_monomials(d, std::move(kept));
}

MonomialConfiguration nonneg_set(const OneParamSubgroup& lambda, int d) {
  return filter_by_weight(lambda, d, false);
}

MonomialConfiguration zero_set(const OneParamSubgroup& lambda, int d) {
  return filter_by_weight(lambda, d, true);
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }
std::ostream& operator<<(std::ostream& os, const OneParamSubgroup& l) { return os << l.str(); }

}  // namespace quintic
