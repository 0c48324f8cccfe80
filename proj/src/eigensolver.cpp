#include "aalpha/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "aalpha/error.hpp"

namespace aalpha {

namespace {

// Householder reduction of the row-major symmetric matrix `v` to
// tridiagonal form. On return d holds the diagonal and e[1..n-1] the
// subdiagonal. With `vectors`, v is overwritten by the orthogonal
// transformation; otherwise its contents are unspecified.
void tridiagonalize(std::span<double> v, std::size_t n, std::span<double> d,
                    std::span<double> e, bool vectors) {
  auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };
  for (std::size_t j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (std::size_t k = j + 1; k < i; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k < i; ++k) V(k, j) -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  if (!vectors) {
    for (std::size_t i = 0; i < n; ++i) d[i] = V(i, i);
    e[0] = 0.0;
    return;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += V(k, i + 1) * V(k, j);
        for (std::size_t k = 0; k <= i; ++k) V(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit-shift QL on the tridiagonal (d, e). Rotations are accumulated
// into v when `vectors`. Eigenvalues are left unsorted in d. Returns false
// when some eigenvalue needs more than kMaxSweepsPerEigenvalue sweeps.
bool tridiagonal_ql(std::span<double> v, std::size_t n, std::span<double> d,
                    std::span<double> e, bool vectors) {
  auto V = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > kMaxSweepsPerEigenvalue) return false;
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (vectors) {
            for (std::size_t k = 0; k < n; ++k) {
              h = V(k, i + 1);
              V(k, i + 1) = s * V(k, i) + c * h;
              V(k, i) = c * V(k, i) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
  return true;
}

void sign_normalize(std::span<double> x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs(x[i]) > std::abs(x[best])) best = i;
  if (!x.empty() && x[best] < 0)
    for (double& xi : x) xi = -xi;
}

}  // namespace

bool symmetric_eigenvalues_in_place(std::span<double> a, std::size_t n,
                                    std::span<double> values, std::span<double> scratch) {
  if (n == 0) return true;
  tridiagonalize(a, n, values, scratch, false);
  if (!tridiagonal_ql(a, n, values, scratch, false)) return false;
  std::sort(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
  return true;
}

Eigendecomposition decompose(const SymmetricMatrix& m, double tol) {
  if (!(tol > 0)) throw ParameterError("decompose: tol must be positive");
  const std::size_t n = m.dimension();
  Eigendecomposition out;
  if (n == 0) return out;

  std::vector<double> v = m.dense();
  std::vector<double> d(n), e(n);
  tridiagonalize(v, n, d, e, true);
  if (!tridiagonal_ql(v, n, d, e, true)) {
    throw SolverError("eigensolver: no convergence within " +
                      std::to_string(kMaxSweepsPerEigenvalue) +
                      " sweeps per eigenvalue (n=" + std::to_string(n) + ")");
  }

  // Columns of v are eigenvectors; order them by descending eigenvalue.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = d[order[k]];
    std::span<double> x(out.vectors.data() + k * n, n);
    for (std::size_t i = 0; i < n; ++i) x[i] = v[i * n + order[k]];
    sign_normalize(x);
  }

  const std::vector<double> dense = m.dense();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = out.vector(k);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double ri = -out.values[k] * x[i];
      for (std::size_t j = 0; j < n; ++j) ri += dense[i * n + j] * x[j];
      r2 += ri * ri;
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  out.residual_norm = worst;
  const double norm = std::max(std::abs(out.values.front()), std::abs(out.values.back()));
  if (worst > tol * std::max(1.0, norm)) {
    throw SolverError("eigensolver: residual " + std::to_string(worst) + " exceeds " +
                      std::to_string(tol) + " * max(1, |M|) with |M|=" + std::to_string(norm));
  }
  return out;
}

Spectrum full_spectrum(const SymmetricMatrix& m, double tol) {
  Eigendecomposition dec = decompose(m, tol);
  return Spectrum{std::move(dec.values), dec.residual_norm};
}

std::vector<double> eigenvalues(const SymmetricMatrix& m) {
  const std::size_t n = m.dimension();
  std::vector<double> a = m.dense();
  std::vector<double> values(n), scratch(n);
  if (!symmetric_eigenvalues_in_place(a, n, values, scratch)) {
    throw SolverError("eigensolver: no convergence (n=" + std::to_string(n) + ")");
  }
  std::reverse(values.begin(), values.end());
  return values;
}

EigenPair extreme_pair(const SymmetricMatrix& m, Extreme which) {
  if (m.dimension() == 0) throw ParameterError("extreme_pair: empty matrix");
  const Eigendecomposition dec = decompose(m);
  const std::size_t k = which == Extreme::largest ? 0 : dec.dimension() - 1;
  const auto x = dec.vector(k);
  return EigenPair{dec.values[k], std::vector<double>(x.begin(), x.end())};
}

std::size_t distinct_count(std::span<const double> values, double cluster_tol) {
  if (!(cluster_tol > 0)) throw ParameterError("distinct_count: cluster_tol must be positive");
  if (values.empty()) return 0;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const double gap = cluster_tol * std::max(1.0, sorted.front() - sorted.back());
  std::size_t clusters = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] - sorted[i] > gap) ++clusters;
  return clusters;
}

double lambda_min_over_components(const Graph& g, Alpha alpha) {
  double lo = 0.0;
  bool any = false;
  for (const Component& c : components(g)) {
    if (c.graph.size() == 0) continue;
    const double v = eigenvalues(alpha_matrix(c.graph, alpha)).back();
    lo = any ? std::min(lo, v) : v;
    any = true;
  }
  return lo;
}

double psd_threshold(const Graph& g, double tol) {
  if (g.order() == 0) throw ParameterError("psd_threshold: graph must be nonempty");
  if (!(tol > 0)) throw ParameterError("psd_threshold: tol must be positive");
  auto f = [&](double a) { return lambda_min_over_components(g, Alpha(a)); };
  if (f(0.0) >= 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < kPsdMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol) return mid;
    (fm < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SweepTable alpha_sweep(const Graph& g, std::span<const Alpha> grid, Execution exec) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i].value() > grid[i - 1].value()))
      throw ParameterError("alpha_sweep: grid must be strictly increasing");

  SweepTable table;
  table.alphas.resize(grid.size());
  table.spectra.resize(grid.size());
  const auto points = static_cast<std::int64_t>(grid.size());
  auto solve = [&](std::int64_t i) {
    table.alphas[i] = grid[i].value();
    table.spectra[i] = full_spectrum(alpha_matrix(g, grid[i]));
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < points; ++i) solve(i);
  } else {
    for (std::int64_t i = 0; i < points; ++i) solve(i);
  }

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double step = table.alphas[i + 1] - table.alphas[i];
    std::vector<double> q(g.order());
    for (std::size_t k = 0; k < g.order(); ++k)
      q[k] = (table.spectra[i + 1].values[k] - table.spectra[i].values[k]) / step;
    table.quotients.push_back(std::move(q));
  }
  return table;
}

}  // namespace aalpha
