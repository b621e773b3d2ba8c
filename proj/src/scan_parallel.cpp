#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quintic/critical.hpp"

// OpenMP kernel for the completeness scan. The a0 axis carries wildly uneven
// work (small a0 means few (a1,a2) pairs), so chunks are handed out
// dynamically; per-thread violation buffers are merged and sorted at the end,
// which keeps the report byte-identical to the serial reference.

namespace quintic::detail {

CompletenessReport scan_parallel(const ScanTables& t, const ScanOptions& opt) {
  CompletenessReport rep;
  rep.degree = t.d;
  rep.bound = t.bound;

  std::vector<std::array<std::int64_t, 4>> bad;
  std::atomic<std::uint64_t> scanned{0};
  std::atomic<std::uint64_t> next_report{opt.progress_step};

#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::array<std::int64_t, 4>> local;
    std::uint64_t mine = 0;
#pragma omp for schedule(dynamic, 1) nowait
    for (int a0 = 1; a0 <= t.bound; ++a0) {
      mine += scan_range(t, a0, a0, local);
      std::uint64_t total = scanned.fetch_add(mine, std::memory_order_relaxed) + mine;
      mine = 0;
      if (opt.progress) {
        std::uint64_t due = next_report.load(std::memory_order_relaxed);
        if (total >= due &&
            next_report.compare_exchange_strong(due, due + opt.progress_step)) {
#pragma omp critical(quintic_scan_progress)
          opt.progress(total);
        }
      }
    }
    scanned.fetch_add(mine, std::memory_order_relaxed);
#pragma omp critical(quintic_scan_merge)
    bad.insert(bad.end(), local.begin(), local.end());
  }
#else
  scanned = scan_range(t, 1, t.bound, bad);
#endif

  rep.scanned = scanned.load();
  if (opt.progress) opt.progress(rep.scanned);
  std::sort(bad.begin(), bad.end());
  for (const auto& v : bad) rep.violations.push_back(OneParamSubgroup(v).normalize());
  return rep;
}

}  // namespace quintic::detail
