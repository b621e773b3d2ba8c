#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "quintic/lattice.hpp"

using namespace quintic;
using testutil::lam;
using testutil::mono;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("monomial enumeration is complete and lex-descending") {
  CHECK(enumerate_monomials(1).size() == 4);
  CHECK(enumerate_monomials(2).size() == 10);
  CHECK(enumerate_monomials(5).size() == 56);
  for (int d = 1; d <= 12; ++d) {
    auto ms = enumerate_monomials(d);
    CHECK(static_cast<long>(ms.size()) == binom(d + 3, 3));
    CHECK(ms.front() == mono(d, 0, 0, 0));
    CHECK(ms.back() == mono(0, 0, 0, d));
    for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(ms[i + 1] < ms[i]);
    for (const auto& m : ms) CHECK(m.degree() == d);
  }
  CHECK_THROWS_AS(enumerate_monomials(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_monomials(-3), std::invalid_argument);
}

TEST_CASE("monomial formatting") {
  CHECK(mono(2, 1, 0, 2).str() == "x0^2*x1*x3^2");
  CHECK(mono(5, 0, 0, 0).str() == "x0^5");
  CHECK(mono(0, 1, 1, 1).str() == "x1*x2*x3");
  CHECK(mono(0, 0, 0, 0).str() == "1");
}

TEST_CASE("subgroup validation and normalization") {
  CHECK_THROWS_AS(OneParamSubgroup({1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(OneParamSubgroup({0, 0, 0, 0}), std::invalid_argument);

  CHECK(lam(4, 2, -1, -5).normalize() == lam(4, 2, -1, -5));
  CHECK(lam(-1, 0, 0, 1).normalize() == lam(1, 0, 0, -1));
  CHECK(lam(2, 0, 0, -2).normalize() == lam(1, 0, 0, -1));
  CHECK(lam(-2, -4, 2, 4).normalize() == lam(2, 1, -1, -2));

  CHECK(lam(1, 0, 0, -1).normalize().is_sorted_primitive());
  CHECK_FALSE(lam(0, 1, 0, -1).is_sorted_primitive());
  CHECK_FALSE(lam(2, 0, 0, -2).is_sorted_primitive());

  CHECK(lam(2, 1, -1, -2).str() == "(2,1,-1,-2)");
}

TEST_CASE("weight pairing") {
  CHECK(weight_pairing(lam(1, 0, 0, -1), mono(5, 0, 0, 0)) == 5);
  CHECK(weight_pairing(lam(1, 0, 0, -1), mono(2, 1, 0, 2)) == 0);
  CHECK(weight_pairing(lam(2, 1, 1, -4), mono(0, 4, 0, 1)) == 0);
  CHECK(weight_pairing(lam(8, -1, -2, -5), mono(0, 0, 5, 0)) == -10);
}

TEST_CASE("centroid pairs to zero with every sum-zero subgroup") {
  auto c = centroid(5);
  for (int i = 0; i < 4; ++i) CHECK(c[i] == Rational(5, 4));
  CHECK(centroid(4)[0] == Rational(1));
  for (const auto& l : testutil::sampled_subgroups(4))
    CHECK(weight_pairing(l, centroid(5)) == Rational(0));
}

TEST_CASE("dominance spot checks") {
  auto all = enumerate_monomials(5);
  for (const auto& m : all) CHECK(monomial_dominates(mono(5, 0, 0, 0), m));
  CHECK(monomial_dominates(mono(1, 0, 0, 4), mono(0, 1, 0, 4)));
  CHECK_FALSE(monomial_dominates(mono(0, 1, 0, 4), mono(1, 0, 0, 4)));
  CHECK_FALSE(monomial_dominates(mono(0, 5, 0, 0), mono(1, 0, 4, 0)));
  CHECK_FALSE(monomial_dominates(mono(1, 0, 4, 0), mono(0, 5, 0, 0)));
  CHECK(monomial_dominates(mono(2, 1, 0, 2), mono(2, 1, 0, 2)));
  CHECK_THROWS_AS(monomial_dominates(mono(2, 0, 0, 0), mono(1, 0, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("dominance agrees with the sampled-subgroup oracle") {
  auto lambdas = testutil::sampled_subgroups(6);
  // The extreme rays must be in the sample for the oracle to be exact.
  CHECK(std::count(lambdas.begin(), lambdas.end(), lam(3, -1, -1, -1)) == 1);
  CHECK(std::count(lambdas.begin(), lambdas.end(), lam(1, 1, -1, -1)) == 1);
  CHECK(std::count(lambdas.begin(), lambdas.end(), lam(1, 1, 1, -3)) == 1);

  for (int d = 1; d <= 5; ++d) {
    auto ms = enumerate_monomials(d);
    for (const auto& m : ms)
      for (const auto& m2 : ms) {
        bool oracle = true;
        for (const auto& l : lambdas) {
          if (weight_pairing(l, m) < weight_pairing(l, m2)) {
            oracle = false;
            break;
          }
        }
        CHECK(monomial_dominates(m, m2) == oracle);
      }
  }
}

TEST_CASE("configuration construction") {
  auto cfg = testutil::two_q_h();
  CHECK(cfg.degree == 5);
  CHECK(cfg.size() == 6);
  CHECK(cfg.contains(mono(0, 5, 0, 0)));
  CHECK_FALSE(cfg.contains(mono(5, 0, 0, 0)));
  for (std::size_t i = 0; i + 1 < cfg.support.size(); ++i)
    CHECK(cfg.support[i + 1] < cfg.support[i]);

  // duplicates collapse
  auto dup = MonomialConfiguration::from_monomials(
      5, {mono(5, 0, 0, 0), mono(5, 0, 0, 0), mono(0, 5, 0, 0)});
  CHECK(dup.size() == 2);

  CHECK_THROWS_AS(MonomialConfiguration::from_monomials(5, {mono(4, 0, 0, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MonomialConfiguration::from_monomials(5, {}), std::invalid_argument);
}

TEST_CASE("nonneg and zero filters") {
  auto l1 = lam(1, 0, 0, -1);
  CHECK(nonneg_set(l1, 5).size() == 34);
  CHECK(zero_set(l1, 5).size() == 12);

  auto z7 = zero_set(lam(2, 1, 1, -4), 5);
  CHECK(z7.size() == 5);
  for (int k = 0; k <= 4; ++k) CHECK(z7.contains(mono(0, k, 4 - k, 1)));

  auto z2 = zero_set(lam(2, 1, -1, -2), 5);
  CHECK(z2.size() == 4);
  CHECK(z2.contains(mono(1, 2, 0, 2)));
  CHECK(z2.contains(mono(2, 0, 2, 1)));
  CHECK(z2.contains(mono(0, 3, 1, 1)));
  CHECK(z2.contains(mono(1, 1, 3, 0)));

  // zero sets are negation-invariant; nonneg sets are not
  for (const auto& l : testutil::sampled_subgroups(3)) {
    OneParamSubgroup neg({-l.a[0], -l.a[1], -l.a[2], -l.a[3]});
    bool has_zero = false;
    for (const auto& m : enumerate_monomials(4))
      if (weight_pairing(l, m) == 0) has_zero = true;
    if (!has_zero) continue;
    auto za = zero_set(l, 4);
    auto zb = zero_set(neg, 4);
    CHECK(za.support == zb.support);
  }

  // partition: zero(l) = nonneg(l) ∩ nonneg(-l); (3,1,-1,-3) would not do
  // here: its degree-5 weights are all odd, so its zero set is empty
  auto lmix = lam(2, 1, 0, -3);
  auto nn = nonneg_set(lmix, 5);
  auto zz = zero_set(lmix, 5);
  for (const auto& m : zz.support) CHECK(nn.contains(m));
  std::size_t pos = 0;
  for (const auto& m : nn.support)
    if (weight_pairing(lmix, m) > 0) ++pos;
  CHECK(pos + zz.size() == nn.size());

  // no invariant monomial at all => the filter refuses to build an empty set
  CHECK_THROWS_AS(zero_set(lam(3, -1, -1, -1), 1), std::invalid_argument);
}
