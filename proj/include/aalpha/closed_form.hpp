#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aalpha/matrix.hpp"

namespace aalpha {

struct Eigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

// Eigenvalues with exact integer multiplicities, sorted descending. Only
// bit-identical values are merged.
struct ClosedFormSpectrum {
  std::vector<Eigenvalue> values;
  std::string source;

  std::size_t dimension() const;
  // Values repeated by multiplicity, descending.
  std::vector<double> expanded() const;
};

inline constexpr double kSecularTol = 1e-12;

// K_n: n-1 once, αn-1 with multiplicity n-1.
ClosedFormSpectrum spectrum_complete(std::size_t n, Alpha alpha);

// K_{a,b}; the arguments are swapped when a < b.
ClosedFormSpectrum spectrum_complete_bipartite(std::size_t a, std::size_t b, Alpha alpha);

// K_{1,n-1}, n >= 2.
ClosedFormSpectrum spectrum_star(std::size_t n, Alpha alpha);

// A_α of a d-regular graph from its adjacency spectrum (descending):
// αd + (1-α)λ_k. ConsistencyError when λ_1 differs from d by more than 1e-9.
ClosedFormSpectrum regular_shift(std::span<const double> adjacency_spectrum, std::size_t d,
                                 Alpha alpha);

// Spectral radius of A_α(G1 ∨ G2) for an r1-regular G1 on n1 vertices and an
// r2-regular G2 on n2 vertices: the larger root of
// (λ - r1 - αn2)(λ - r2 - αn1) = (1-α)² n1 n2.
double join_regular_radius(std::size_t r1, std::size_t n1, std::size_t r2, std::size_t n2,
                           Alpha alpha);

// Spectral radius of A_α(K_{n_1,...,n_r}), r >= 2, α < 1. Writing t = λ - αn,
// it is the unique root of Σ n_k/(t + n_k) = 1/(1-α) with t > -min n_k.
// Returns (1-1/r)n exactly at α = 1 - 1/r.
double multipartite_radius(std::span<const std::size_t> parts, Alpha alpha);

// Full spectrum of A_α(K_{n_1,...,n_r}) for any r >= 1 and α in [0,1]:
//   α(n - n_k) with multiplicity n_k - 1 for each part,
//   αn - s with multiplicity c - 1 for each part size s shared by c parts,
//   one secular root between each pair of consecutive poles, and the
//   rightmost root (the spectral radius).
// At α = 1 the matrix is D and the spectrum is the degree multiset.
ClosedFormSpectrum spectrum_complete_multipartite(std::span<const std::size_t> parts, Alpha alpha);

}  // namespace aalpha
