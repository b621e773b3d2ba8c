#include <doctest.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "helpers.hpp"
#include "quintic/critical.hpp"

using namespace quintic;
using testutil::lam;
using testutil::mono;

namespace {

const std::vector<OneParamSubgroup>& degree5_subgroups() {
  static const std::vector<OneParamSubgroup> v = {
      lam(1, 0, 0, -1), lam(2, 1, -1, -2), lam(4, 2, -1, -5), lam(2, 1, 0, -3),
      lam(3, 0, -1, -2), lam(5, 1, -2, -4), lam(2, 1, 1, -4), lam(2, 2, -1, -3),
      lam(7, 1, -4, -4), lam(8, -1, -2, -5)};
  return v;
}

bool subset(const MonomialConfiguration& a, const MonomialConfiguration& b) {
  for (const auto& m : a.support)
    if (!b.contains(m)) return false;
  return true;
}

}  // namespace

TEST_CASE("candidate from a monomial pair") {
  auto c1 = candidate_from_pair(5, mono(2, 1, 0, 2), mono(0, 5, 0, 0));
  REQUIRE(c1.has_value());
  CHECK(*c1 == lam(1, 0, 0, -1));

  auto c2 = candidate_from_pair(5, mono(0, 4, 0, 1), mono(0, 0, 4, 1));
  REQUIRE(c2.has_value());
  CHECK(*c2 == lam(2, 1, 1, -4));

  // antisymmetric input, identical output thanks to the sign convention
  auto c2r = candidate_from_pair(5, mono(0, 0, 4, 1), mono(0, 4, 0, 1));
  REQUIRE(c2r.has_value());
  CHECK(*c2r == *c2);

  CHECK_FALSE(candidate_from_pair(5, mono(5, 0, 0, 0), mono(5, 0, 0, 0)).has_value());
  CHECK_THROWS_AS(candidate_from_pair(5, mono(4, 0, 0, 0), mono(0, 5, 0, 0)),
                  std::invalid_argument);

  // vanishing on both named monomials
  for (const auto& m1 : enumerate_monomials(4))
    for (const auto& m2 : enumerate_monomials(4)) {
      auto c = candidate_from_pair(4, m1, m2);
      if (!c.has_value()) continue;
      CHECK(weight_pairing(*c, m1) == 0);
      CHECK(weight_pairing(*c, m2) == 0);
      CHECK(c->a[0] + c->a[1] + c->a[2] + c->a[3] == 0);
    }
}

TEST_CASE("the ten degree-5 critical subgroups") {
  auto recs = enumerate_critical(5);
  REQUIRE(recs.size() == 10);

  // sorted lexicographically on the weight vector
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) CHECK(recs[i].lambda < recs[i + 1].lambda);

  // exactly the expected set
  for (const auto& l : degree5_subgroups()) {
    bool found = false;
    for (const auto& r : recs)
      if (r.lambda == l) found = true;
    CHECK_MESSAGE(found, l.str());
  }

  std::map<int, const CriticalRecord*> by_label;
  for (const auto& r : recs) {
    CHECK(r.lambda.is_sorted_primitive());
    CHECK(r.label >= 1);
    CHECK(r.label <= 10);
    by_label[r.label] = &r;
    CHECK(quintic_label(r.lambda) == r.label);
  }
  REQUIRE(by_label.size() == 10);

  CHECK(by_label[1]->lambda == lam(1, 0, 0, -1));
  CHECK(by_label[2]->lambda == lam(2, 1, -1, -2));
  CHECK(by_label[3]->lambda == lam(4, 2, -1, -5));
  CHECK(by_label[4]->lambda == lam(2, 1, 0, -3));
  CHECK(by_label[5]->lambda == lam(3, 0, -1, -2));
  CHECK(by_label[6]->lambda == lam(5, 1, -2, -4));
  CHECK(by_label[7]->lambda == lam(2, 1, 1, -4));
  CHECK(by_label[8]->lambda == lam(2, 2, -1, -3));
  CHECK(by_label[9]->lambda == lam(7, 1, -4, -4));
  CHECK(by_label[10]->lambda == lam(8, -1, -2, -5));

  for (int lbl = 1; lbl <= 6; ++lbl)
    CHECK(by_label[lbl]->kind == CriticalKind::MinimalOrbitBoundary);
  for (int lbl = 7; lbl <= 10; ++lbl)
    CHECK(by_label[lbl]->kind == CriticalKind::UnstableCone);

  CHECK(by_label[1]->nonneg.size() == 34);
  const std::map<int, std::size_t> zero_sizes = {{1, 12}, {2, 4}, {3, 3}, {4, 4}, {5, 4},
                                                 {6, 3},  {7, 5}, {8, 4}, {9, 2}, {10, 2}};
  for (const auto& [lbl, n] : zero_sizes) CHECK(by_label[lbl]->zero.size() == n);

  // record coherence: zero = weight-0 subset of nonneg = nonneg_set(lambda)
  for (const auto& r : recs) {
    auto nn = nonneg_set(r.lambda, 5);
    CHECK(r.nonneg.support == nn.support);
    for (const auto& m : r.zero.support) CHECK(weight_pairing(r.lambda, m) == 0);
    auto zz = zero_set(r.lambda, 5);
    CHECK(r.zero.support == zz.support);
  }
}

TEST_CASE("critical records are pairwise inclusion-incomparable") {
  auto recs = enumerate_critical(5);
  for (std::size_t i = 0; i < recs.size(); ++i)
    for (std::size_t j = 0; j < recs.size(); ++j) {
      if (i == j) continue;
      CHECK_FALSE(subset(recs[i].nonneg, recs[j].nonneg));
    }
}

TEST_CASE("M+ is the upward closure of its dominance-minimal monomials") {
  auto recs = enumerate_critical(5);
  auto all = enumerate_monomials(5);
  for (const auto& r : recs) {
    // upward closed: anything dominating a member is a member
    for (const auto& m : r.nonneg.support)
      for (const auto& m2 : all)
        if (monomial_dominates(m2, m)) CHECK(r.nonneg.contains(m2));

    // minimal elements regenerate the set
    std::vector<Monomial> minimal;
    for (const auto& m : r.nonneg.support) {
      bool is_min = true;
      for (const auto& m2 : r.nonneg.support)
        if (m2 != m && monomial_dominates(m, m2)) is_min = false;
      if (is_min) minimal.push_back(m);
    }
    for (const auto& m2 : all) {
      bool generated = false;
      for (const auto& m : minimal)
        if (monomial_dominates(m2, m)) generated = true;
      CHECK(generated == r.nonneg.contains(m2));
    }
  }
}

TEST_CASE("classification of cone type") {
  CHECK(classify_critical(lam(1, 0, 0, -1), 5) == CriticalKind::MinimalOrbitBoundary);
  CHECK(classify_critical(lam(2, 1, -1, -2), 5) == CriticalKind::MinimalOrbitBoundary);
  CHECK(classify_critical(lam(2, 1, 1, -4), 5) == CriticalKind::UnstableCone);
  CHECK(classify_critical(lam(8, -1, -2, -5), 5) == CriticalKind::UnstableCone);
}

TEST_CASE("labels fall back to zero off the table") {
  CHECK(quintic_label(lam(1, 1, -1, -1)) == 0);
  CHECK(quintic_label(lam(3, -1, -1, -1)) == 0);
}

TEST_CASE("enumeration is deterministic") {
  auto a = enumerate_critical(5);
  auto b = enumerate_critical(5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lambda == b[i].lambda);
    CHECK(a[i].nonneg.support == b[i].nonneg.support);
    CHECK(a[i].kind == b[i].kind);
    CHECK(a[i].label == b[i].label);
  }
}
