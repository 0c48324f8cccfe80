#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"
#include "aalpha/parallel.hpp"

namespace aalpha {

inline constexpr double kDefaultSolverTol = 1e-12;
inline constexpr int kMaxSweepsPerEigenvalue = 50;
inline constexpr double kDefaultClusterTol = 1e-8;
inline constexpr double kDefaultPsdTol = 1e-10;
inline constexpr int kPsdMaxIterations = 200;

// All eigenvalues, sorted descending, with the largest residual
// ‖M v_k - λ_k v_k‖₂ observed for the computed eigenvectors.
struct Spectrum {
  std::vector<double> values;
  double residual_norm = 0.0;

  std::size_t size() const { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit length
};

// Full eigendecomposition. Eigenvectors are orthonormal and sign-normalized:
// the entry of largest magnitude (lowest index on ties) is positive.
struct Eigendecomposition {
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // vector k occupies [k*n, (k+1)*n)
  double residual_norm = 0.0;

  std::size_t dimension() const { return values.size(); }
  std::span<const double> vector(std::size_t k) const {
    return {vectors.data() + k * values.size(), values.size()};
  }
};

// Householder tridiagonalization followed by implicit-shift QL with
// eigenvector accumulation. Throws SolverError when an eigenvalue needs more
// than 50 sweeps, or when the final residual exceeds tol·max(1, ‖M‖₂).
Eigendecomposition decompose(const SymmetricMatrix& m, double tol = kDefaultSolverTol);

Spectrum full_spectrum(const SymmetricMatrix& m, double tol = kDefaultSolverTol);

// Eigenvalues only, descending. No residual check.
std::vector<double> eigenvalues(const SymmetricMatrix& m);

// Allocation-free kernel for small dense matrices: `a` holds the row-major
// n*n matrix and is destroyed; `values` receives the eigenvalues in
// ascending order; `scratch` needs n entries. Returns false if the sweep
// cap was hit.
bool symmetric_eigenvalues_in_place(std::span<double> a, std::size_t n,
                                    std::span<double> values, std::span<double> scratch);

enum class Extreme { largest, smallest };

EigenPair extreme_pair(const SymmetricMatrix& m, Extreme which);

// Number of clusters in the sorted spectrum, splitting where consecutive
// values differ by more than cluster_tol·max(1, λ_1 - λ_n).
std::size_t distinct_count(std::span<const double> values, double cluster_tol = kDefaultClusterTol);
inline std::size_t distinct_count(const Spectrum& s, double cluster_tol = kDefaultClusterTol) {
  return distinct_count(s.values, cluster_tol);
}

// Smallest eigenvalue of A_α(G), taken as the minimum over components that
// contain an edge (0 when there are none).
double lambda_min_over_components(const Graph& g, Alpha alpha);

// Smallest α with A_α(G) positive semidefinite, by bisection on
// f(α) = λ_min(A_α(G)), which is nondecreasing in α. Returns 0 if A_0 is
// already PSD.
double psd_threshold(const Graph& g, double tol = kDefaultPsdTol);

struct SweepTable {
  std::vector<double> alphas;
  std::vector<Spectrum> spectra;
  // quotients[i][k] = (λ_k(α_{i+1}) - λ_k(α_i)) / (α_{i+1} - α_i)
  std::vector<std::vector<double>> quotients;
};

// Spectrum of A_α(G) at every grid point (strictly increasing grid).
// Results are ordered by α whichever execution path is used.
SweepTable alpha_sweep(const Graph& g, std::span<const Alpha> grid,
                       Execution exec = Execution::parallel);

}  // namespace aalpha
