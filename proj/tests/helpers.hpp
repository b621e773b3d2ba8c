#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "quintic/lattice.hpp"

// Shared builders for the fixed configurations exercised across the suite.

namespace testutil {

inline quintic::Monomial mono(int i0, int i1, int i2, int i3) {
  return quintic::Monomial{{i0, i1, i2, i3}};
}

inline quintic::OneParamSubgroup lam(std::int64_t a0, std::int64_t a1,
                                     std::int64_t a2, std::int64_t a3) {
  return quintic::OneParamSubgroup({a0, a1, a2, a3});
}

inline quintic::MonomialConfiguration cfg_of(
    int degree, std::initializer_list<std::array<int, 4>> exps) {
  std::vector<quintic::Monomial> ms;
  for (const auto& e : exps) ms.push_back(quintic::Monomial{e});
  return quintic::MonomialConfiguration::from_monomials(degree, std::move(ms));
}

inline quintic::MonomialConfiguration fermat_quintic() {
  return cfg_of(5, {{{5, 0, 0, 0}}, {{0, 5, 0, 0}}, {{0, 0, 5, 0}}, {{0, 0, 0, 5}}});
}

// Support of x1*(x0*x3 - x2^2 - x1^2)^2: a quadric pair plus hyperplane.
inline quintic::MonomialConfiguration two_q_h() {
  return cfg_of(5, {{{2, 1, 0, 2}},
                    {{1, 3, 0, 1}},
                    {{1, 1, 2, 1}},
                    {{0, 5, 0, 0}},
                    {{0, 3, 2, 0}},
                    {{0, 1, 4, 0}}});
}

// Every degree-5 monomial with i3 <= 1: a point of multiplicity >= 4 at p3.
inline quintic::MonomialConfiguration quadruple_point_template() {
  std::vector<quintic::Monomial> ms;
  for (const auto& m : quintic::enumerate_monomials(5))
    if (m.e[3] <= 1) ms.push_back(m);
  return quintic::MonomialConfiguration::from_monomials(5, std::move(ms));
}

// Every degree-5 monomial with i2 + i3 >= 3: a line of triple points.
inline quintic::MonomialConfiguration triple_line_template() {
  std::vector<quintic::Monomial> ms;
  for (const auto& m : quintic::enumerate_monomials(5))
    if (m.e[2] + m.e[3] >= 3) ms.push_back(m);
  return quintic::MonomialConfiguration::from_monomials(5, std::move(ms));
}

// Cone over a plane quintic: every monomial without x3.
inline quintic::MonomialConfiguration cone_config() {
  std::vector<quintic::Monomial> ms;
  for (const auto& m : quintic::enumerate_monomials(5))
    if (m.e[3] == 0) ms.push_back(m);
  return quintic::MonomialConfiguration::from_monomials(5, std::move(ms));
}

// x3*f4(x1,x2): the lambda7-invariant quadruple-line family.
inline quintic::MonomialConfiguration x3_f4_config() {
  std::vector<quintic::Monomial> ms;
  for (int k = 0; k <= 4; ++k) ms.push_back(mono(0, k, 4 - k, 1));
  return quintic::MonomialConfiguration::from_monomials(5, std::move(ms));
}

// All normalized subgroups with entries bounded by `bound` in absolute value:
// the sampling family for dominance-oracle checks. Contains the extreme rays
// (3,-1,-1,-1), (1,1,-1,-1), (1,1,1,-3) once bound >= 3.
inline std::vector<quintic::OneParamSubgroup> sampled_subgroups(int bound) {
  std::vector<quintic::OneParamSubgroup> out;
  for (int a0 = 0; a0 <= bound; ++a0)
    for (int a1 = -bound; a1 <= a0; ++a1)
      for (int a2 = -bound; a2 <= a1; ++a2) {
        const int a3 = -(a0 + a1 + a2);
        if (a3 > a2 || a3 < -bound) continue;
        if (a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0) continue;
        quintic::OneParamSubgroup l({a0, a1, a2, a3});
        if (!l.is_sorted_primitive()) continue;
        out.push_back(l);
      }
  return out;
}

}  // namespace testutil
