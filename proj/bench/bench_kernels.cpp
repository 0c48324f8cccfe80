// Serial reference path against the OpenMP path for the three parallel
// kernels. Usage: bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "aalpha/combinatorics.hpp"
#include "aalpha/eigensolver.hpp"
#include "aalpha/extremal.hpp"
#include "aalpha/parallel.hpp"

using namespace aalpha;

namespace {

template <class F>
double best_ms(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-34s serial %10.2f ms  parallel %10.2f ms  speedup %5.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", configure_threads_from_env());

  const Alpha scan_alphas[] = {Alpha(0.2), Alpha(0.5), Alpha(0.8)};
  const GraphClass tri_free{ClassKind::clique_free, 2};
  report("scan clique_free(3), n=6, 3 alphas",
         best_ms(repeats, [&] { scan_class(6, tri_free, scan_alphas, Execution::serial); }),
         best_ms(repeats, [&] { scan_class(6, tri_free, scan_alphas, Execution::parallel); }));

  const Graph big = join(build(family::Cycle{40}), build(family::Path{40}));
  std::vector<Alpha> grid;
  for (int k = 0; k <= 100; ++k) grid.emplace_back(k / 100.0);
  report("sweep n=80, 101 alphas",
         best_ms(repeats, [&] { alpha_sweep(big, grid, Execution::serial); }),
         best_ms(repeats, [&] { alpha_sweep(big, grid, Execution::parallel); }));

  const Graph cut = build(family::Split{22, 5});
  report("maxcut n=22",
         best_ms(repeats, [&] { maxcut(cut, Execution::serial); }),
         best_ms(repeats, [&] { maxcut(cut, Execution::parallel); }));
  return 0;
}
