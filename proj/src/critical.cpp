#include "quintic/critical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quintic {

std::optional<OneParamSubgroup> candidate_from_pair(int d, const Monomial& m1,
                                                    const Monomial& m2) {
  if (m1.degree() != d || m2.degree() != d)
    throw std::invalid_argument("pair monomials must have the configuration degree");
  // kernel of the rows (1,1,1,1), m1, m2 via signed 3x3 minors; the kernel is
  // one-dimensional exactly when the minors are not all zero
  std::array<std::int64_t, 4> v{};
  int s = 1;
  for (int skip = 0; skip < 4; ++skip) {
    std::array<int, 3> c{};
    for (int i = 0, k = 0; i < 4; ++i)
      if (i != skip) c[k++] = i;
    std::int64_t a0 = m1.e[c[0]], a1 = m1.e[c[1]], a2 = m1.e[c[2]];
    std::int64_t b0 = m2.e[c[0]], b1 = m2.e[c[1]], b2 = m2.e[c[2]];
    v[skip] = s * ((a1 * b2 - a2 * b1) - (a0 * b2 - a2 * b0) + (a0 * b1 - a1 * b0));
    s = -s;
  }
  if (v == std::array<std::int64_t, 4>{0, 0, 0, 0}) return std::nullopt;
  std::int64_t g = 0;
  for (auto w : v) g = std::gcd(g, w < 0 ? -w : w);
  for (auto& w : v) w /= g;
  for (auto w : v) {
    if (w == 0) continue;
    if (w < 0)
      for (auto& u : v) u = -u;
    break;
  }
  return OneParamSubgroup(v);
}

CriticalKind classify_critical(const OneParamSubgroup& lambda, int d) {
  HullVerdict h = hull_membership(centroid(d), zero_set(lambda, d));
  return h.position == HullPosition::Outside ? CriticalKind::UnstableCone
                                             : CriticalKind::MinimalOrbitBoundary;
}

int quintic_label(const OneParamSubgroup& lambda) {
  static const std::array<std::array<std::int64_t, 4>, 10> table = {{
      {1, 0, 0, -1},
      {2, 1, -1, -2},
      {4, 2, -1, -5},
      {2, 1, 0, -3},
      {3, 0, -1, -2},
      {5, 1, -2, -4},
      {2, 1, 1, -4},
      {2, 2, -1, -3},
      {7, 1, -4, -4},
      {8, -1, -2, -5},
  }};
  for (std::size_t i = 0; i < table.size(); ++i)
    if (lambda.a == table[i]) return static_cast<int>(i) + 1;
  return 0;
}

std::vector<CriticalRecord> enumerate_critical(int d) {
  const auto monomials = enumerate_monomials(d);
  const std::size_t n = monomials.size();

  std::set<OneParamSubgroup> candidates;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto v = candidate_from_pair(d, monomials[i], monomials[j]);
      if (!v) continue;
      candidates.insert(v->normalize());
      std::array<std::int64_t, 4> neg{};
      for (int k = 0; k < 4; ++k) neg[k] = -v->a[k];
      candidates.insert(OneParamSubgroup(neg).normalize());
    }

  // weight-set masks in enumeration order, maximality over the whole pool
  struct Entry {
    OneParamSubgroup lambda;
    std::vector<bool> mask;
    std::size_t count = 0;
  };
  std::vector<Entry> pool;
  pool.reserve(candidates.size());
  for (const auto& lam : candidates) {
    Entry e{lam, std::vector<bool>(n, false), 0};
    for (std::size_t t = 0; t < n; ++t)
      if (weight_pairing(lam, monomials[t]) >= 0) {
        e.mask[t] = true;
        ++e.count;
      }
    pool.push_back(std::move(e));
  }

  auto contained = [n](const Entry& a, const Entry& b) {  // mask(a) subset of mask(b)
    for (std::size_t t = 0; t < n; ++t)
      if (a.mask[t] && !b.mask[t]) return false;
    return true;
  };

  // Distinct lambda can cut out the same M+ (three such classes at d=5); the
  // published representative is not the lex extremum of its class in any
  // consistent direction, so ties go to the conventional vector when one is
  // present, then to the lexicographically smallest lambda.
  auto prefer = [d](const OneParamSubgroup& x, const OneParamSubgroup& y) {
    if (d == 5) {
      bool lx = quintic_label(x) > 0, ly = quintic_label(y) > 0;
      if (lx != ly) return lx;
    }
    return x < y;
  };

  std::vector<CriticalRecord> records;
  for (const auto& e : pool) {
    bool maximal = true;
    for (const auto& other : pool) {
      if (&other == &e || other.count < e.count) continue;
      if (!contained(e, other)) continue;
      if (other.count > e.count || prefer(other.lambda, e.lambda)) {
        maximal = false;  // strictly larger set, or equal set with preferred lambda
        break;
      }
    }
    if (!maximal) continue;
    CriticalRecord r;
    r.lambda = e.lambda;
    r.nonneg = nonneg_set(e.lambda, d);
    r.zero = zero_set(e.lambda, d);
    r.kind = classify_critical(e.lambda, d);
    records.push_back(std::move(r));
  }

  std::sort(records.begin(), records.end(),
            [](const CriticalRecord& a, const CriticalRecord& b) {
              return a.lambda < b.lambda;
            });
  for (auto& r : records)
    if (d == 5) r.label = quintic_label(r.lambda);
  return records;
}

namespace detail {

ScanTables make_scan_tables(int d, int bound) {
  if (bound < 1) throw std::invalid_argument("scan bound must be >= 1");
  ScanTables t;
  t.d = d;
  t.bound = bound;
  t.monomials = enumerate_monomials(d);
  t.words = (t.monomials.size() + 63) / 64;
  for (const auto& rec : enumerate_critical(d)) {
    std::vector<std::uint64_t> mask(t.words, 0);
    for (std::size_t i = 0; i < t.monomials.size(); ++i)
      if (weight_pairing(rec.lambda, t.monomials[i]) >= 0) mask[i / 64] |= 1ull << (i % 64);
    t.critical_masks.push_back(std::move(mask));
  }
  return t;
}

}  // namespace detail

CompletenessReport verify_completeness(int d, int bound, const ScanOptions& opt) {
  detail::ScanTables t = detail::make_scan_tables(d, bound);
  return opt.parallel ? detail::scan_parallel(t, opt) : detail::scan_serial(t, opt);
}

}  // namespace quintic
