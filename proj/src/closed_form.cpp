#include "aalpha/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "aalpha/error.hpp"

namespace aalpha {

std::size_t ClosedFormSpectrum::dimension() const {
  std::size_t n = 0;
  for (const Eigenvalue& e : values) n += e.multiplicity;
  return n;
}

std::vector<double> ClosedFormSpectrum::expanded() const {
  std::vector<double> out;
  for (const Eigenvalue& e : values) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

namespace {

ClosedFormSpectrum finish(std::vector<Eigenvalue> raw, std::string source) {
  std::erase_if(raw, [](const Eigenvalue& e) { return e.multiplicity == 0; });
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Eigenvalue& a, const Eigenvalue& b) { return a.value > b.value; });
  ClosedFormSpectrum out;
  out.source = std::move(source);
  for (const Eigenvalue& e : raw) {
    if (!out.values.empty() && out.values.back().value == e.value)
      out.values.back().multiplicity += e.multiplicity;
    else
      out.values.push_back(e);
  }
  return out;
}

// half_sum ± √disc, larger root first.
std::pair<double, double> quadratic_roots(double half_sum, double disc) {
  const double root = std::sqrt(std::max(0.0, disc));
  return {half_sum + root, half_sum - root};
}

}  // namespace

ClosedFormSpectrum spectrum_complete(std::size_t n, Alpha alpha) {
  if (n < 1) throw ParameterError("spectrum_complete: n must be >= 1");
  const double a = alpha.value();
  const double nn = static_cast<double>(n);
  return finish({{nn - 1.0, 1}, {a * nn - 1.0, n - 1}}, "complete");
}

ClosedFormSpectrum spectrum_complete_bipartite(std::size_t a, std::size_t b, Alpha alpha) {
  if (a < 1 || b < 1) throw ParameterError("spectrum_complete_bipartite: a, b must be >= 1");
  if (a < b) std::swap(a, b);
  const double x = alpha.value();
  const double s = static_cast<double>(a + b);
  const double ab = static_cast<double>(a) * static_cast<double>(b);
  const auto [hi, lo] =
      quadratic_roots(0.5 * x * s, 0.25 * (x * x * s * s + 4.0 * ab * (1.0 - 2.0 * x)));
  return finish({{hi, 1},
                 {lo, 1},
                 {x * static_cast<double>(a), b - 1},
                 {x * static_cast<double>(b), a - 1}},
                "complete_bipartite");
}

ClosedFormSpectrum spectrum_star(std::size_t n, Alpha alpha) {
  if (n < 2) throw ParameterError("spectrum_star: n must be >= 2");
  const double x = alpha.value();
  const double nn = static_cast<double>(n);
  // Same arithmetic as K_{n-1,1}: s = n, ab = n-1.
  const auto [hi, lo] =
      quadratic_roots(0.5 * x * nn, 0.25 * (x * x * nn * nn + 4.0 * (nn - 1.0) * (1.0 - 2.0 * x)));
  return finish({{hi, 1}, {lo, 1}, {x * 1.0, n - 2}}, "star");
}

ClosedFormSpectrum regular_shift(std::span<const double> adjacency_spectrum, std::size_t d,
                                 Alpha alpha) {
  if (adjacency_spectrum.empty()) throw ParameterError("regular_shift: empty spectrum");
  const double dd = static_cast<double>(d);
  const double top = *std::max_element(adjacency_spectrum.begin(), adjacency_spectrum.end());
  if (std::abs(top - dd) > 1e-9) {
    throw ConsistencyError("regular_shift: largest adjacency eigenvalue " + std::to_string(top) +
                           " differs from degree " + std::to_string(d));
  }
  const double a = alpha.value();
  std::vector<Eigenvalue> raw;
  for (double l : adjacency_spectrum) raw.push_back({a * dd + (1.0 - a) * l, 1});
  auto top_it = std::max_element(raw.begin(), raw.end(),
                                 [](const Eigenvalue& x, const Eigenvalue& y) { return x.value < y.value; });
  top_it->value = dd;
  return finish(std::move(raw), "regular_shift");
}

double join_regular_radius(std::size_t r1, std::size_t n1, std::size_t r2, std::size_t n2,
                           Alpha alpha) {
  if (n1 < 1 || n2 < 1) throw ParameterError("join_regular_radius: n1, n2 must be >= 1");
  if (r1 + 1 > n1 || r2 + 1 > n2)
    throw ParameterError("join_regular_radius: requires r_i <= n_i - 1");
  const double a = alpha.value();
  const double p = static_cast<double>(r1) + a * static_cast<double>(n2);
  const double q = static_cast<double>(r2) + a * static_cast<double>(n1);
  const double c = (1.0 - a) * (1.0 - a) * static_cast<double>(n1) * static_cast<double>(n2);
  return quadratic_roots(0.5 * (p + q), 0.25 * (p - q) * (p - q) + c).first;
}

namespace {

void check_parts(std::span<const std::size_t> parts, std::size_t min_parts, const char* who) {
  if (parts.size() < min_parts)
    throw ParameterError(std::string(who) + ": needs at least " + std::to_string(min_parts) + " parts");
  for (std::size_t p : parts)
    if (p < 1) throw ParameterError(std::string(who) + ": part sizes must be >= 1");
}

// Root of g(t) = Σ n_k/(t + n_k) - 1/(1-α) on (lo, hi), where g is
// decreasing from +∞ (or positive) at lo to negative at hi.
double secular_root(std::span<const std::size_t> parts, double alpha, double lo, double hi) {
  const double target = 1.0 / (1.0 - alpha);
  auto g = [&](double t) {
    double s = 0.0;
    for (std::size_t p : parts) s += static_cast<double>(p) / (t + static_cast<double>(p));
    return s - target;
  };
  for (int it = 0; it < 400 && hi - lo > kSecularTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  if (!(hi - lo <= kSecularTol * std::max(1.0, std::abs(hi))))
    throw SolverError("secular equation: bisection did not converge");
  return 0.5 * (lo + hi);
}

}  // namespace

double multipartite_radius(std::span<const std::size_t> parts, Alpha alpha) {
  check_parts(parts, 2, "multipartite_radius");
  const double a = alpha.value();
  if (a == 1.0) throw ParameterError("multipartite_radius: alpha = 1 is not supported");
  const double r = static_cast<double>(parts.size());
  const double n = static_cast<double>(std::accumulate(parts.begin(), parts.end(), std::size_t{0}));
  if (a == 1.0 - 1.0 / r) return (1.0 - 1.0 / r) * n;
  const double nmin = static_cast<double>(*std::min_element(parts.begin(), parts.end()));
  // g(t) < n/(t + nmin) <= 1/(1-α) once t >= n(1-α) - nmin.
  const double hi = n * (1.0 - a) - nmin + 1.0;
  return a * n + secular_root(parts, a, -nmin, hi);
}

ClosedFormSpectrum spectrum_complete_multipartite(std::span<const std::size_t> parts, Alpha alpha) {
  check_parts(parts, 1, "spectrum_complete_multipartite");
  const double a = alpha.value();
  const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  const double nn = static_cast<double>(n);
  std::vector<Eigenvalue> raw;

  if (a == 1.0) {
    for (std::size_t p : parts) raw.push_back({nn - static_cast<double>(p), p});
    return finish(std::move(raw), "complete_multipartite");
  }
  if (parts.size() == 1) {
    raw.push_back({0.0, n});
    return finish(std::move(raw), "complete_multipartite");
  }

  for (std::size_t p : parts) raw.push_back({a * (nn - static_cast<double>(p)), p - 1});

  std::map<std::size_t, std::size_t, std::greater<>> sizes;  // size -> count, descending
  for (std::size_t p : parts) ++sizes[p];
  for (const auto& [s, c] : sizes) raw.push_back({a * nn - static_cast<double>(s), c - 1});

  // Poles at t = -s; consecutive distinct sizes bound one root each.
  std::vector<double> poles;
  for (const auto& [s, c] : sizes) poles.push_back(-static_cast<double>(s));  // ascending in t
  for (std::size_t i = 0; i + 1 < poles.size(); ++i)
    raw.push_back({a * nn + secular_root(parts, a, poles[i], poles[i + 1]), 1});
  raw.push_back({multipartite_radius(parts, alpha), 1});
  return finish(std::move(raw), "complete_multipartite");
}

}  // namespace aalpha
