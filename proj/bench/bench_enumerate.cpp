// Wall-clock comparison of the enumeration paths: serial reference vs the
// backtracking kernel at one worker vs all workers.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "agmonoid/enumerate.hpp"
#include "agmonoid/reference.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_run(std::function<std::size_t()> const& fn, std::size_t& count) {
  auto start = Clock::now();
  count = fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(char const* label, int n, std::function<std::size_t()> const& serial_ref,
            std::function<std::size_t(int)> const& kernel) {
  std::size_t count = 0;
  std::printf("%-22s n=%d\n", label, n);
  if (serial_ref) {
    double ms = time_run(serial_ref, count);
    std::printf("  reference        %10.1f ms   count=%zu\n", ms, count);
  }
  double ms1 = time_run([&] { return kernel(1); }, count);
  std::printf("  kernel workers=1 %10.1f ms   count=%zu\n", ms1, count);
  double msN = time_run([&] { return kernel(0); }, count);
  std::printf("  kernel workers=* %10.1f ms   count=%zu   speedup=%.2fx\n", msN, count,
              msN > 0 ? ms1 / msN : 0.0);
}

std::size_t kernel_cm(int n, int workers) {
  agmonoid::EnumerationOptions opts;
  opts.workers = workers;
  return agmonoid::enumerate_commutative_monoids(n, opts).count();
}

std::size_t kernel_ag(int n, int workers) {
  agmonoid::EnumerationOptions opts;
  opts.workers = workers;
  return agmonoid::enumerate_ag_monoids_bruteforce(n, opts).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = argc > 1 && std::strcmp(argv[1], "--heavy") == 0;

  report("commutative monoids", 4,
         [] { return agmonoid::reference::enumerate_commutative_monoids(4).count(); },
         [](int w) { return kernel_cm(4, w); });
  report("commutative monoids", 6, nullptr, [](int w) { return kernel_cm(6, w); });
  report("ag monoids (direct)", 4,
         [] { return agmonoid::reference::enumerate_ag_monoids_bruteforce(4).count(); },
         [](int w) { return kernel_ag(4, w); });
  report("ag monoids (direct)", 5, nullptr, [](int w) { return kernel_ag(5, w); });
  if (heavy) {
    report("commutative monoids", 7, nullptr, [](int w) { return kernel_cm(7, w); });
  }
  return 0;
}
