#pragma once

// Reference implementations for tests. Deliberately naive and independent of
// the library algorithms they check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "aalpha/graph.hpp"

namespace oracle {

using aalpha::Graph;

// Dense row-major n*n matrix of A_α built straight from the definition.
std::vector<double> alpha_dense(const Graph& g, double alpha);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

inline std::vector<double> alpha_eigenvalues(const Graph& g, double alpha) {
  return jacobi_eigenvalues(alpha_dense(g, alpha), g.order());
}

// Max edge cut over all 2^n vertex subsets.
std::size_t maxcut(const Graph& g);

// Smallest k such that one of the k^n colorings is proper.
std::size_t chromatic_number(const Graph& g);

// True iff some subset of `k` vertices is a clique (subset enumeration).
bool has_clique(const Graph& g, std::size_t k);

// Orbits by trying every vertex permutation.
std::vector<std::vector<aalpha::Vertex>> orbits(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Number of triangle-free graphs among the 2^(n(n-1)/2) edge subsets, with
// edges taken from a list independent of the library's slot order.
std::size_t count_triangle_free(std::size_t n);

// Shortest-path distances by Floyd-Warshall; returns 0 for disconnected.
std::size_t diameter_or_zero(const Graph& g);

// Erdős–Rényi G(n, p).
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);
// Random connected graph: a random spanning tree plus G(n, p) extras.
Graph random_connected(std::mt19937_64& rng, std::size_t n, double p);

}  // namespace oracle
