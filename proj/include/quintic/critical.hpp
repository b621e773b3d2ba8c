#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quintic/hull.hpp"
#include "quintic/lattice.hpp"

// Critical one-parameter subgroups of degree-d configurations: the finitely
// many normalized lambda whose non-negative monomial sets M+(lambda) are
// inclusion-maximal. Non-stability of any configuration is certified by
// containment in one of them after a coordinate permutation, so the module
// also carries the exhaustive bounded scan that verifies the list is complete.

namespace quintic {

enum class CriticalKind { MinimalOrbitBoundary, UnstableCone };

struct CriticalRecord {
  OneParamSubgroup lambda;          // normalized
  MonomialConfiguration nonneg;     // M+(lambda)
  MonomialConfiguration zero;       // weight-0 subset
  CriticalKind kind = CriticalKind::UnstableCone;
  // Conventional display index (1-based) for the ten degree-5 records; 0 when
  // no conventional numbering applies.
  int label = 0;
};

// Primitive generator of the sum-zero functionals vanishing on both monomials,
// up to sign (first nonzero entry positive); nullopt when the two conditions
// are dependent, i.e. the solution space is not one-dimensional.
std::optional<OneParamSubgroup> candidate_from_pair(int d, const Monomial& m1,
                                                    const Monomial& m2);

// Whether the barycenter 0_d lies in the hull of the zero-weight set: if so
// the subgroup fixes semistable points with closed orbit (boundary stratum),
// otherwise its cone is entirely unstable.
CriticalKind classify_critical(const OneParamSubgroup& lambda, int d);

// All critical records for degree d, sorted lexicographically on the weight
// vector. Candidates come from monomial pairs (both signs, normalized); a
// record is kept iff its M+ is inclusion-maximal. Distinct lambda can cut out
// the same M+; such ties keep the conventional degree-5 vector when the class
// contains one, else the lexicographically smallest lambda.
std::vector<CriticalRecord> enumerate_critical(int d);

// Conventional 1-based numbering of the ten degree-5 critical subgroups as
// used in reports and by `boundary --lambda`; 0 for anything else.
int quintic_label(const OneParamSubgroup& normalized_lambda);

struct ScanOptions {
  bool parallel = true;
  // called with the running candidate count roughly every `progress_step`
  // candidates, and once at the end; null disables reporting
  std::function<void(std::uint64_t)> progress;
  std::uint64_t progress_step = 1u << 22;
};

struct CompletenessReport {
  int degree = 0;
  int bound = 0;
  std::uint64_t scanned = 0;  // normalized primitive sum-zero vectors visited
  // normalized lambda whose M+ is contained in no critical record's M+
  std::vector<OneParamSubgroup> violations;
};

// Exhaustive check over every normalized primitive sum-zero lambda with
// |a_i| <= bound that M+(lambda) is contained in some critical M+ (no
// coordinate change needed: normalization fixes the ordering). The serial
// kernel is the reference implementation; the parallel kernel must agree with
// it exactly and is the one wired to ScanOptions.parallel.
CompletenessReport verify_completeness(int d, int bound, const ScanOptions& opt = {});

namespace detail {
// Containment masks for the scan kernels: bit t of mask k set iff monomial t
// (enumeration order) lies in M+ of critical record k. 64-bit words.
struct ScanTables {
  int d = 0;
  int bound = 0;
  std::vector<Monomial> monomials;
  std::vector<std::vector<std::uint64_t>> critical_masks;
  std::size_t words = 0;
};
ScanTables make_scan_tables(int d, int bound);
// Shared inner loop: scans a0 in [lo, hi], appends raw violating vectors,
// returns the candidate count for the range.
std::uint64_t scan_range(const ScanTables& t, int lo, int hi,
                         std::vector<std::array<std::int64_t, 4>>& bad);
CompletenessReport scan_serial(const ScanTables& t, const ScanOptions& opt);
CompletenessReport scan_parallel(const ScanTables& t, const ScanOptions& opt);
}  // namespace detail

}  // namespace quintic
