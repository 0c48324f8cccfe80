#include <doctest.h>

#include <set>

#include "aalpha/combinatorics.hpp"
#include "aalpha/enumerate.hpp"
#include "aalpha/error.hpp"
#include "oracles.hpp"

using namespace aalpha;

TEST_SUITE("enumerate") {

TEST_CASE("counts") {
  CHECK(enumerate_graphs(3).size() == 8);
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(0).size() == 1);
  const auto tri_free = enumerate_graphs(4, [](const Graph& g) { return is_clique_free(g, 3); });
  CHECK(tri_free.size() == 41);
  CHECK(tri_free.size() == oracle::count_triangle_free(4));
  CHECK(enumerate_graphs(5, [](const Graph& g) { return is_clique_free(g, 3); }).size() ==
        oracle::count_triangle_free(5));
  CHECK_THROWS_AS(enumerate_graphs(9), CapacityError);
}

TEST_CASE("every labeled graph exactly once, in mask order") {
  const auto all = enumerate_graphs(4);
  REQUIRE(all.size() == 64);
  std::set<std::vector<Edge>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(edge_mask(all[i]) == i);
    seen.insert(all[i].edges());
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("edge table slots are lexicographic") {
  const EdgeTable t(5);
  CHECK(t.slots() == 10);
  std::size_t i = 0;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) {
      CHECK(t.slot(i) == Edge(u, v));
      CHECK(t.index(u, v) == i);
      CHECK(t.index(v, u) == i);
      ++i;
    }
}

TEST_CASE("packed predicates agree with the graph versions") {
  const EdgeTable t(6);
  for (std::uint64_t mask = 0; mask < (1u << 15); mask += 7) {
    const PackedGraph p = PackedGraph::from_mask(t, mask);
    const Graph g = p.to_graph(t);
    CHECK(p.edge_count() == g.size());
    CHECK(packed_has_clique(p, 3) == !is_clique_free(g, 3));
    CHECK(packed_has_clique(p, 4) == !is_clique_free(g, 4));
    const std::size_t chi = chromatic_number(g);
    CHECK(packed_colorable(p, 2) == (chi <= 2));
    CHECK(packed_colorable(p, 3) == (chi <= 3));
  }
}

TEST_CASE("range splitting covers the interval") {
  const MaskRange all = full_range(5);
  CHECK(all.size() == 1024);
  for (std::size_t chunks : {1u, 3u, 7u, 1024u, 2000u}) {
    const auto parts = split_range(all, chunks);
    CHECK(parts.front().begin == all.begin);
    CHECK(parts.back().end == all.end);
    for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i].begin == parts[i - 1].end);
  }
}

TEST_CASE("sub-streams partition the full stream") {
  const MaskRange all = full_range(4);
  std::size_t total = 0;
  for (const MaskRange& r : split_range(all, 5)) {
    GraphStream s(4, r, [](const Graph& g) { return is_clique_free(g, 3); });
    while (s.next()) ++total;
  }
  CHECK(total == 41);
}

}
