#pragma once

#include <cstddef>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/parallel.hpp"

namespace aalpha {

inline constexpr std::size_t kChromaticLimit = 16;
inline constexpr std::size_t kMaxcutLimit = 24;
inline constexpr std::size_t kOrbitLimit = 10;

// True iff g has no complete subgraph on `clique_size` vertices
// (clique_size >= 2). Exact backtracking.
bool is_clique_free(const Graph& g, std::size_t clique_size);

std::size_t clique_number(const Graph& g);

// Exact chromatic number: clique lower bound, greedy upper bound, and a
// backtracking k-colorability test in between. Throws CapacityError when
// n > limit (limit at most 64).
std::size_t chromatic_number(const Graph& g, std::size_t limit = kChromaticLimit);

// Maximum number of edges across a bipartition, by exhaustive search over
// all 2^(n-1) bipartitions. The parallel path walks Gray-code blocks; the
// serial path evaluates each bipartition from scratch. n <= 24.
std::size_t maxcut(const Graph& g, Execution exec = Execution::parallel);

// Partition of V(G) into automorphism classes, each sorted, classes ordered
// by smallest member. n <= 10.
std::vector<std::vector<Vertex>> vertex_orbits(const Graph& g);

// Exact isomorphism test by backtracking over vertex maps. n <= 10.
bool are_isomorphic(const Graph& g, const Graph& h);

// True iff g is complete multipartite with exactly `parts` nonempty parts
// (non-adjacency is an equivalence relation with `parts` classes).
bool is_complete_multipartite(const Graph& g, std::size_t parts);

}  // namespace aalpha
