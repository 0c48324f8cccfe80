#include <doctest.h>

#include <cstdlib>
#include <random>

#include "aalpha/combinatorics.hpp"
#include "aalpha/eigensolver.hpp"
#include "aalpha/extremal.hpp"
#include "aalpha/parallel.hpp"
#include "oracles.hpp"

using namespace aalpha;

TEST_SUITE("parallel") {

TEST_CASE("thread override") {
  CHECK(max_threads() >= 1);
  setenv(kThreadsEnv, "2", 1);
  CHECK(configure_threads_from_env() == 2);
  setenv(kThreadsEnv, "junk", 1);
  CHECK(configure_threads_from_env() >= 1);
  unsetenv(kThreadsEnv);
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
  for (int threads : {1, 3}) {
    setenv(kThreadsEnv, std::to_string(threads).c_str(), 1);
    configure_threads_from_env();
    std::mt19937_64 rng(137);
    for (int i = 0; i < 10; ++i) {
      const Graph g = oracle::random_graph(rng, 4 + i, 0.5);
      CHECK(maxcut(g, Execution::serial) == maxcut(g, Execution::parallel));
      std::vector<Alpha> grid;
      for (int k = 0; k <= 20; ++k) grid.emplace_back(0.05 * k);
      const SweepTable s = alpha_sweep(g, grid, Execution::serial);
      const SweepTable p = alpha_sweep(g, grid, Execution::parallel);
      for (std::size_t k = 0; k < grid.size(); ++k) CHECK(s.spectra[k].values == p.spectra[k].values);
    }
    const Alpha alphas[] = {Alpha(0.2), Alpha(0.7)};
    const GraphClass cls{ClassKind::r_chromatic, 2};
    const ScanResult s = scan_class(6, cls, alphas, Execution::serial);
    const ScanResult p = scan_class(6, cls, alphas, Execution::parallel);
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(s.per_alpha[k].max_radius == p.per_alpha[k].max_radius);
      CHECK(s.per_alpha[k].examined == p.per_alpha[k].examined);
      REQUIRE(s.per_alpha[k].maximizers.size() == p.per_alpha[k].maximizers.size());
      for (std::size_t j = 0; j < s.per_alpha[k].maximizers.size(); ++j)
        CHECK(s.per_alpha[k].maximizers[j].mask == p.per_alpha[k].maximizers[j].mask);
    }
  }
  unsetenv(kThreadsEnv);
  configure_threads_from_env();
}

}
