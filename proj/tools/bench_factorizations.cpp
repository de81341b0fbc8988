// Timing harness for the reflection-factorization DP: serial reference
// against the OpenMP level sweep, with the closed form as the correctness
// gate on every run.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fec/dynkin.hpp"
#include "fec/weyl.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(fec::FactorizationCount (*kernel)(const fec::DynkinDiagram&, std::span<const int>),
              const fec::DynkinDiagram& d, int repeats, fec::FactorizationCount& out) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    out = kernel(d, {});
    const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
    if (elapsed.count() < best) best = elapsed.count();
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  bool deep = false;
  int repeats = 3;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--deep") deep = true;
    else if (arg == "--repeats" && i + 1 < argc) repeats = std::stoi(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--deep] [--repeats N]\n", argv[0]);
      return 2;
    }
  }

  std::vector<fec::DynkinDiagram> diagrams{
      {fec::DynkinFamily::A, 5}, {fec::DynkinFamily::A, 6}, {fec::DynkinFamily::D, 5},
      {fec::DynkinFamily::D, 6}, {fec::DynkinFamily::E, 6}};
  if (deep) {
    diagrams.push_back({fec::DynkinFamily::E, 7});
    diagrams.push_back({fec::DynkinFamily::E, 8});
  }

  std::printf("threads: %d, repeats: %d (best-of)\n", omp_get_max_threads(), repeats);
  std::printf("%-8s %10s %16s %12s %12s %8s %6s\n", "diagram", "interval", "count",
              "serial_ms", "openmp_ms", "speedup", "ok");
  int failures = 0;
  for (const auto& d : diagrams) {
    fec::FactorizationCount serial, parallel;
    const double serial_ms =
        run_ms(fec::count_reflection_factorizations_serial, d, repeats, serial);
    const double parallel_ms =
        run_ms(fec::count_reflection_factorizations_parallel, d, repeats, parallel);
    const bool ok = serial.count == parallel.count && serial.count == fec::deligne_count(d) &&
                    serial.interval_size == parallel.interval_size;
    if (!ok) ++failures;
    std::printf("%-8s %10ld %16s %12.2f %12.2f %8.2f %6s\n", d.str().c_str(),
                serial.interval_size, serial.count.get_str().c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, ok ? "yes" : "NO");
  }
  return failures == 0 ? 0 : 1;
}
