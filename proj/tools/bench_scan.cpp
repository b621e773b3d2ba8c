// Times the serial reference kernel against the parallel one on the same
// completeness scan and checks the reports agree byte-for-byte in content.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "quintic/critical.hpp"

namespace {

double run(bool parallel, int d, int bound, quintic::CompletenessReport* out) {
  quintic::ScanOptions opt;
  opt.parallel = parallel;
  const auto t0 = std::chrono::steady_clock::now();
  *out = quintic::verify_completeness(d, bound, opt);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int d = 5;
  int bound = 375;
  if (argc > 1) d = std::atoi(argv[1]);
  if (argc > 2) bound = std::atoi(argv[2]);
  if (d < 2 || bound < 1) {
    std::cerr << "usage: bench-scan [degree] [bound]\n";
    return 2;
  }

  quintic::CompletenessReport serial, parallel;
  const double ts = run(false, d, bound, &serial);
  const double tp = run(true, d, bound, &parallel);

  std::cout << "degree " << d << " bound " << bound << '\n';
  std::cout << "serial:   " << ts << " s, scanned " << serial.scanned << ", "
            << serial.violations.size() << " violations\n";
  std::cout << "parallel: " << tp << " s, scanned " << parallel.scanned << ", "
            << parallel.violations.size() << " violations\n";
  std::cout << "speedup:  " << (tp > 0 ? ts / tp : 0.0) << "x\n";

  const bool same = serial.scanned == parallel.scanned &&
                    serial.violations == parallel.violations;
  std::cout << "reports identical: " << (same ? "yes" : "NO") << '\n';
  return same ? 0 : 1;
}
