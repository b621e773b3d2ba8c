#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quintic/rational.hpp"

// Exponent lattice of degree-d monomials in x0..x3 and the weight pairing
// against diagonal one-parameter subgroups. Everything downstream (stability
// verdicts, critical subgroups, Luna slices) is built on these pairings.

namespace quintic {

// Exponent vector (i0,i1,i2,i3) of a monomial x0^i0 x1^i1 x2^i2 x3^i3.
struct Monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  int operator[](int i) const { return e[i]; }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  // Lexicographic on exponents; enumeration and configuration order is the
  // descending version of this.
  bool operator<(const Monomial& o) const { return e < o.e; }

  std::string str() const;  // "x0^2*x1*x3^2"; "1" for the empty exponent
};

// Diagonal 1-PS diag(t^a0,...,t^a3) of SL4: integer weights summing to zero.
// `normalized` marks the canonical representative of its conjugacy class:
// weights sorted descending, gcd 1. Only normalize() sets it.
struct OneParamSubgroup {
  std::array<std::int64_t, 4> a{0, 0, 0, 0};
  bool normalized = false;

  OneParamSubgroup() = default;
  explicit OneParamSubgroup(std::array<std::int64_t, 4> w);  // validates sum 0, nonzero

  OneParamSubgroup normalize() const;  // sort descending, divide by gcd
  bool is_sorted_primitive() const;

  bool operator==(const OneParamSubgroup& o) const { return a == o.a; }
  bool operator<(const OneParamSubgroup& o) const { return a < o.a; }

  std::string str() const;  // "(2,1,-1,-2)"
};

// Finite set of degree-d monomials (the support of a quintic, a zero-weight
// set, ...). Support is kept sorted lex-descending and duplicate-free; the
// degree is stored explicitly and every element must match it.
struct MonomialConfiguration {
  int degree = 0;
  std::vector<Monomial> support;

  static MonomialConfiguration from_monomials(int degree, std::vector<Monomial> ms);

  bool contains(const Monomial& m) const;
  std::size_t size() const { return support.size(); }
};

// All degree-d monomials in x0..x3, lex-descending: x0^d first, x3^d last.
std::vector<Monomial> enumerate_monomials(int d);

// <lambda, m> = sum a_i * i_i.
std::int64_t weight_pairing(const OneParamSubgroup& lambda, const Monomial& m);

// Pairing extended to rational points of the degree-d simplex plane.
Rational weight_pairing(const OneParamSubgroup& lambda, const std::array<Rational, 4>& p);

// Barycenter 0_d = (d/4, d/4, d/4, d/4) of the exponent simplex. A sum-zero
// lambda pairs to 0 with it, which is what ties hull membership to stability.
std::array<Rational, 4> centroid(int d);

// Partial order: m dominates m2 iff the three prefix sums of m - m2 are >= 0
// (the fourth vanishes for equal degrees). Equivalent to non-negative pairing
// against the extreme rays (3,-1,-1,-1), (1,1,-1,-1), (1,1,1,-3) of the cone
// of descending sum-zero weight vectors.
bool monomial_dominates(const Monomial& m, const Monomial& m2);

// M+(lambda): monomials of degree d with non-negative lambda-weight.
MonomialConfiguration nonneg_set(const OneParamSubgroup& lambda, int d);

// Zero-weight monomials: the support of lambda-invariant degree-d forms.
MonomialConfiguration zero_set(const OneParamSubgroup& lambda, int d);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const OneParamSubgroup& l);

}  // namespace quintic
