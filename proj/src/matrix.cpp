#include "aalpha/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aalpha/error.hpp"

namespace aalpha {

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParameterError("alpha must lie in [0,1], got " + std::to_string(value));
  }
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  if (!std::isfinite(value)) throw ParameterError("matrix entries must be finite");
  data_[slot(i, j)] = value;
}

std::vector<double> SymmetricMatrix::dense() const {
  std::vector<double> out(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j <= i; ++j) out[i * n_ + j] = out[j * n_ + i] = (*this)(i, j);
  return out;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymmetricMatrix::trace_of_square() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = (*this)(i, j);
      t += (i == j ? 1.0 : 2.0) * v * v;
    }
  return t;
}

double SymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

SymmetricMatrix combine(double a, const SymmetricMatrix& x, double b, const SymmetricMatrix& y) {
  if (x.dimension() != y.dimension()) throw DimensionError("combine: dimension mismatch");
  SymmetricMatrix out(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i)
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, a * x(i, j) + b * y(i, j));
  return out;
}

SymmetricMatrix assemble(const Graph& g, MatrixKind kind, std::optional<Alpha> alpha) {
  double diag_weight = 0.0;  // coefficient of d(v) on the diagonal
  double edge_weight = 0.0;  // off-diagonal entry for an edge
  switch (kind) {
    case MatrixKind::adjacency: diag_weight = 0.0; edge_weight = 1.0; break;
    case MatrixKind::degree: diag_weight = 1.0; edge_weight = 0.0; break;
    case MatrixKind::laplacian: diag_weight = 1.0; edge_weight = -1.0; break;
    case MatrixKind::signless: diag_weight = 1.0; edge_weight = 1.0; break;
    case MatrixKind::alpha:
      if (!alpha) throw ParameterError("assemble: alpha kind requires a value");
      diag_weight = alpha->value();
      edge_weight = 1.0 - alpha->value();
      break;
  }
  SymmetricMatrix m(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    m.set(v, v, diag_weight * static_cast<double>(g.degree(v)));
  for (const Edge& e : g.edges()) m.set(e.u, e.v, edge_weight);
  return m;
}

double identity_residual(const Graph& g, Alpha alpha, Alpha beta) {
  const SymmetricMatrix a = alpha_matrix(g, alpha);
  const SymmetricMatrix b = alpha_matrix(g, beta);
  const SymmetricMatrix l = assemble(g, MatrixKind::laplacian);
  const double gap = alpha.value() - beta.value();
  double worst = 0.0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j) - gap * l(i, j)));
  return worst;
}

namespace {

void require_length(const Graph& g, std::span<const double> x) {
  if (x.size() != g.order()) {
    throw DimensionError("vector length " + std::to_string(x.size()) +
                         " does not match graph order " + std::to_string(g.order()));
  }
}

}  // namespace

QuadraticForms quadratic_form_variants(const Graph& g, Alpha alpha, std::span<const double> x) {
  require_length(g, x);
  const double a = alpha.value();
  double per_edge = 0.0, pair_sums = 0.0, cross = 0.0, weighted = 0.0;
  for (const Edge& e : g.edges()) {
    const double xu = x[e.u], xv = x[e.v];
    per_edge += a * xu * xu + 2.0 * (1.0 - a) * xu * xv + a * xv * xv;
    pair_sums += (xu + xv) * (xu + xv);
    cross += xu * xv;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    weighted += static_cast<double>(g.degree(v)) * x[v] * x[v];
  return QuadraticForms{
      per_edge,
      (2.0 * a - 1.0) * weighted + (1.0 - a) * pair_sums,
      a * weighted + 2.0 * (1.0 - a) * cross,
  };
}

double quadratic_form(const Graph& g, Alpha alpha, std::span<const double> x) {
  const QuadraticForms q = quadratic_form_variants(g, alpha, x);
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  const double tol = 1e-12 * norm2 * std::max<double>(1.0, static_cast<double>(g.max_degree()));
  if (std::abs(q.per_edge - q.laplacian_split) > tol || std::abs(q.per_edge - q.degree_split) > tol) {
    throw ConsistencyError("quadratic form expansions disagree beyond tolerance");
  }
  return q.per_edge;
}

double vertex_score(const Graph& g, Alpha alpha, std::span<const double> x, Vertex v) {
  require_length(g, x);
  if (v >= g.order()) throw ParameterError("vertex_score: vertex out of range");
  double neighbor_sum = 0.0;
  for (Vertex i : g.neighbors(v)) neighbor_sum += x[i];
  return alpha.value() * static_cast<double>(g.degree(v)) * x[v] +
         (1.0 - alpha.value()) * neighbor_sum;
}

std::vector<double> apply_alpha(const Graph& g, Alpha alpha, std::span<const double> x) {
  require_length(g, x);
  std::vector<double> y(g.order());
  for (Vertex v = 0; v < g.order(); ++v) y[v] = vertex_score(g, alpha, x, v);
  return y;
}

}  // namespace aalpha
