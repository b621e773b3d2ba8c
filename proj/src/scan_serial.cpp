#include <algorithm>
#include <numeric>

#include "quintic/critical.hpp"

// Reference kernel for the completeness scan: a plain nested loop over the
// descending sum-zero weight vectors, kept deliberately simple so the
// parallel kernel has something trustworthy to be measured against. The
// parallel kernel partitions the outer a0 axis and calls the same range scan.

namespace quintic::detail {

namespace {

inline std::int64_t gcd4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return std::gcd(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b),
                  std::gcd(c < 0 ? -c : c, d < 0 ? -d : d));
}

}  // namespace

// Every normalized primitive lambda with a0 in [lo, hi]: a0 >= a1 >= a2 >= a3,
// sum zero, gcd 1, entries within +-bound. Violations are appended raw;
// returns the number of vectors visited.
std::uint64_t scan_range(const ScanTables& t, int lo, int hi,
                         std::vector<std::array<std::int64_t, 4>>& bad) {
  const std::int64_t B = t.bound;
  const std::size_t n = t.monomials.size();
  const std::size_t words = t.words;
  std::vector<std::uint64_t> mask(words);
  std::uint64_t scanned = 0;

  for (std::int64_t a0 = lo; a0 <= hi; ++a0) {
    for (std::int64_t a1 = a0; a1 >= -B; --a1) {
      const std::int64_t s = -(a0 + a1);                      // a2 + a3
      const std::int64_t a2_lo = s > 0 ? (s + 1) / 2 : s / 2;  // ceil(s/2): a2 >= a3
      const std::int64_t a2_hi = std::min<std::int64_t>(a1, s + B);  // a3 >= -B
      for (std::int64_t a2 = a2_lo; a2 <= a2_hi; ++a2) {
        const std::int64_t a3 = s - a2;
        if (gcd4(a0, a1, a2, a3) != 1) continue;
        ++scanned;

        std::fill(mask.begin(), mask.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
          const auto& e = t.monomials[i].e;
          std::int64_t w = a0 * e[0] + a1 * e[1] + a2 * e[2] + a3 * e[3];
          if (w >= 0) mask[i >> 6] |= 1ull << (i & 63);
        }
        bool ok = false;
        for (const auto& crit : t.critical_masks) {
          bool inside = true;
          for (std::size_t wd = 0; wd < words; ++wd)
            if (mask[wd] & ~crit[wd]) {
              inside = false;
              break;
            }
          if (inside) {
            ok = true;
            break;
          }
        }
        if (!ok) bad.push_back({a0, a1, a2, a3});
      }
    }
  }
  return scanned;
}

CompletenessReport scan_serial(const ScanTables& t, const ScanOptions& opt) {
  CompletenessReport rep;
  rep.degree = t.d;
  rep.bound = t.bound;

  std::vector<std::array<std::int64_t, 4>> bad;
  std::uint64_t next_report = opt.progress_step;
  for (int a0 = 1; a0 <= t.bound; ++a0) {  // chunked so progress can stream
    rep.scanned += scan_range(t, a0, a0, bad);
    if (opt.progress && rep.scanned >= next_report) {
      opt.progress(rep.scanned);
      while (next_report <= rep.scanned) next_report += opt.progress_step;
    }
  }
  if (opt.progress) opt.progress(rep.scanned);

  std::sort(bad.begin(), bad.end());
  for (const auto& v : bad) rep.violations.push_back(OneParamSubgroup(v).normalize());
  return rep;
}

}  // namespace quintic::detail
