#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aalpha/graph.hpp"

namespace aalpha {

// Interpolation weight in [0,1]. A_α = αD + (1-α)A.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const { return value_; }
  friend bool operator==(Alpha, Alpha) = default;

 private:
  double value_;
};

// Dense real symmetric matrix. Only the lower triangle is stored, so
// (i,j) and (j,i) always refer to the same value.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2, 0.0) {}

  std::size_t dimension() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[slot(i, j)]; }
  void set(std::size_t i, std::size_t j, double value);

  // Row-major n*n copy.
  std::vector<double> dense() const;

  double trace() const;
  double trace_of_square() const;  // tr(M^2) = sum of squared entries
  double max_abs() const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    return i >= j ? i * (i + 1) / 2 + j : j * (j + 1) / 2 + i;
  }

  std::size_t n_ = 0;
  std::vector<double> data_;
};

// a*x + b*y entrywise.
SymmetricMatrix combine(double a, const SymmetricMatrix& x, double b, const SymmetricMatrix& y);

enum class MatrixKind { adjacency, degree, laplacian, signless, alpha };

// A(G), D(G), L = D - A, Q = D + A, or A_α(G). `alpha` is required for
// MatrixKind::alpha and ignored otherwise.
SymmetricMatrix assemble(const Graph& g, MatrixKind kind,
                         std::optional<Alpha> alpha = std::nullopt);

inline SymmetricMatrix alpha_matrix(const Graph& g, Alpha alpha) {
  return assemble(g, MatrixKind::alpha, alpha);
}

// max |A_α - A_β - (α-β)L| over all entries. Zero in exact arithmetic.
double identity_residual(const Graph& g, Alpha alpha, Alpha beta);

// The three edge/vertex expansions of <A_α x, x>.
struct QuadraticForms {
  double per_edge;        // sum over edges of αx_u² + 2(1-α)x_u x_v + αx_v²
  double laplacian_split; // (2α-1) Σ d(u)x_u² + (1-α) Σ_edges (x_u + x_v)²
  double degree_split;    // α Σ d(u)x_u² + 2(1-α) Σ_edges x_u x_v
};

QuadraticForms quadratic_form_variants(const Graph& g, Alpha alpha, std::span<const double> x);

// <A_α x, x>. All three expansions are evaluated and must agree to
// 1e-12·‖x‖²·max(1,Δ); otherwise ConsistencyError.
double quadratic_form(const Graph& g, Alpha alpha, std::span<const double> x);

// Row v of A_α applied to x: α d(v) x_v + (1-α) Σ_{i~v} x_i.
double vertex_score(const Graph& g, Alpha alpha, std::span<const double> x, Vertex v);

// A_α x.
std::vector<double> apply_alpha(const Graph& g, Alpha alpha, std::span<const double> x);

}  // namespace aalpha
