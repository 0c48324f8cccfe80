#include <doctest.h>

#include <random>

#include "aalpha/combinatorics.hpp"
#include "aalpha/error.hpp"
#include "oracles.hpp"

using namespace aalpha;

TEST_SUITE("combinatorics") {

TEST_CASE("clique freeness") {
  CHECK(is_clique_free(build(family::Cycle{5}), 3));
  CHECK(is_clique_free(build(family::Turan{5, 2}), 3));
  CHECK_FALSE(is_clique_free(build(family::Complete{4}), 4));
  CHECK_THROWS_AS(is_clique_free(build(family::Complete{4}), 1), ParameterError);
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t r = 1; r <= n; ++r) CHECK(is_clique_free(build(family::Turan{n, r}), r + 1));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(rng, 3 + i % 9, 0.5);
    for (std::size_t k = 2; k <= 5; ++k) CHECK(is_clique_free(g, k) == !oracle::has_clique(g, k));
  }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(build(family::Cycle{5})) == 3);
  CHECK(chromatic_number(build(family::Turan{6, 3})) == 3);
  CHECK(chromatic_number(edgeless(5)) == 1);
  CHECK(chromatic_number(Graph(0)) == 0);
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t r = 1; r <= n; ++r) CHECK(chromatic_number(build(family::Turan{n, r})) == r);
  CHECK_THROWS_AS(chromatic_number(build(family::Complete{17})), CapacityError);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 7, 0.45);
    CHECK(chromatic_number(g) == oracle::chromatic_number(g));
  }
}

TEST_CASE("maxcut") {
  CHECK(maxcut(build(family::Complete{4})) == 4);
  CHECK(maxcut(build(family::CompleteBipartite{2, 3})) == 6);
  CHECK(maxcut(build(family::Cycle{5})) == 4);
  CHECK_THROWS_AS(maxcut(edgeless(25)), CapacityError);

  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 12, 0.5);
    const std::size_t expect = oracle::maxcut(g);
    CHECK(maxcut(g, Execution::serial) == expect);
    CHECK(maxcut(g, Execution::parallel) == expect);
  }
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = 1; b <= 5; ++b) {
      const Graph g = build(family::CompleteBipartite{a, b});
      CHECK(maxcut(g) == g.size());
    }
}

TEST_CASE("vertex orbits") {
  using V = std::vector<std::vector<Vertex>>;
  CHECK(vertex_orbits(build(family::Star{5})) == V{{0}, {1, 2, 3, 4}});
  CHECK(vertex_orbits(build(family::Cycle{5})) == V{{0, 1, 2, 3, 4}});
  CHECK(vertex_orbits(build(family::Path{3})) == V{{0, 2}, {1}});
  CHECK_THROWS_AS(vertex_orbits(edgeless(11)), CapacityError);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 6, 0.4);
    const auto orbits = vertex_orbits(g);
    CHECK(orbits == oracle::orbits(g));
    for (const auto& orbit : orbits)
      for (Vertex v : orbit) CHECK(g.degree(v) == g.degree(orbit.front()));
  }
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    const Graph a = oracle::random_graph(rng, 2 + i % 6, 0.5);
    const Graph b = oracle::random_graph(rng, 2 + i % 6, 0.5);
    CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
    CHECK(are_isomorphic(a, a));
  }
}

TEST_CASE("complete multipartite recognition") {
  CHECK(is_complete_multipartite(build(family::Turan{7, 3}), 3));
  CHECK_FALSE(is_complete_multipartite(build(family::Turan{7, 3}), 2));
  CHECK(is_complete_multipartite(build(family::Star{6}), 2));
  CHECK(is_complete_multipartite(edgeless(4), 1));
  CHECK_FALSE(is_complete_multipartite(build(family::Cycle{5}), 3));
  CHECK(is_complete_multipartite(build(family::Cycle{4}), 2));
}

}
