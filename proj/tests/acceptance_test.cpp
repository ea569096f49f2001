// Runs the full verification suite and prints one pass/fail line per
// criterion; the process exit code is the ctest verdict.

#include <chrono>
#include <cstdio>

#include "hypercone/acceptance.hpp"

int main() {
  auto t0 = std::chrono::steady_clock::now();
  hypercone::SuiteReport rep = hypercone::run_acceptance_suite(7);
  std::fputs(rep.to_human().c_str(), stdout);
  double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("suite wall time: %.1fs\n", el);
  if (el >= 300.0) {
    std::puts("[FAIL] suite exceeded the five-minute budget");
    return 1;
  }
  return rep.all_pass() ? 0 : 1;
}
