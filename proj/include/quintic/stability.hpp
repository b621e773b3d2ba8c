#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quintic/critical.hpp"
#include "quintic/hull.hpp"
#include "quintic/lattice.hpp"

// Torus stability of monomial configurations via the numerical criterion:
// mu(lambda, cfg) = min over the support of the weight pairing. Verdicts are
// hull positions of the barycenter, non-stability is certified by M+
// containment after a coordinate permutation, and the most destabilizing
// direction comes from an exact nearest-point computation.

namespace quintic {

enum class TorusVerdict { Stable, StrictlySemistable, Unstable };

// min_{m in cfg} <lambda, m>
std::int64_t mu(const OneParamSubgroup& lambda, const MonomialConfiguration& cfg);

// Stable / StrictlySemistable / Unstable as the barycenter lies Inside / on
// the Boundary of / Outside the hull of the support.
TorusVerdict torus_verdict(const MonomialConfiguration& cfg);

// perm[j] = original coordinate placed at position j; image exponent vector
// is m'[j] = m[perm[j]].
Monomial apply_permutation(const std::array<int, 4>& perm, const Monomial& m);
MonomialConfiguration apply_permutation(const std::array<int, 4>& perm,
                                        const MonomialConfiguration& cfg);

struct Certificate {
  std::array<int, 4> permutation{0, 1, 2, 3};
  std::size_t record_index = 0;   // into the critical record list
  OneParamSubgroup lambda;        // the cited record's subgroup
  std::int64_t mu_value = 0;      // mu(lambda, permuted cfg); >= 0 by containment
};

// First (permutation, record) pair, permutations in lexicographic order from
// the identity, records in list order, with sigma(cfg) inside the record's
// M+. Empty for stable configurations.
std::optional<Certificate> nonstable_certificate(const MonomialConfiguration& cfg,
                                                 const std::vector<CriticalRecord>& records);

struct WorstDirection {
  OneParamSubgroup lambda;  // primitive integer direction, not sorted
  Rational squared_ratio;   // max of mu(l,cfg)^2 / |l|^2 = squared distance
                            // from the barycenter to the hull
};

// Kempf's most destabilizing direction: the nearest point to the origin of
// the barycenter-shifted support hull, found by exact face enumeration in the
// sum-zero 3-space. Empty unless the verdict is Unstable.
std::optional<WorstDirection> worst_1ps(const MonomialConfiguration& cfg);

// Weight flag of a normalized lambda: each descent a_i > a_{i+1} contributes
// the subspace spanned by the trailing coordinates. point = V(x0,x1,x2),
// line = V(x0,x1), plane = V(x0); partial when some descent is missing.
struct KempfFlag {
  std::optional<int> point;                 // index of the distinguished point (3)
  std::optional<std::pair<int, int>> line;  // vanishing coordinates (0,1)
  std::optional<int> plane;                 // vanishing coordinate (0)
  bool partial = true;
};

KempfFlag kempf_flag(const OneParamSubgroup& normalized_lambda);

struct StabilityReport {
  int degree = 0;
  MonomialConfiguration cfg;
  TorusVerdict verdict = TorusVerdict::Stable;
  HullVerdict hull;
  std::optional<Certificate> certificate;
  std::optional<WorstDirection> worst;
  std::optional<KempfFlag> flag;  // of the certificate lambda when present,
                                  // else of the normalized worst direction
};

StabilityReport analyze_stability(const MonomialConfiguration& cfg,
                                  const std::vector<CriticalRecord>& records);

const char* verdict_name(TorusVerdict v);

}  // namespace quintic
