#include "aalpha/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "aalpha/combinatorics.hpp"
#include "aalpha/error.hpp"

namespace aalpha {

const char* to_string(Side side) {
  switch (side) {
    case Side::upper_on: return "upper_on";
    case Side::lower_on: return "lower_on";
    case Side::identity: return "identity";
  }
  return "?";
}

BoundRecord make_record(std::string name, Side side, std::string target, double bound,
                        double value) {
  BoundRecord r;
  r.name = std::move(name);
  r.side = side;
  r.target = std::move(target);
  r.bound_value = bound;
  r.spectral_value = value;
  r.tolerance = kBoundTol * std::max(1.0, std::abs(bound));
  r.slack = side == Side::lower_on ? value - bound : bound - value;
  r.holds = side == Side::identity ? std::abs(r.slack) <= r.tolerance : r.slack >= -r.tolerance;
  return r;
}

BoundRecord skipped_record(std::string name, Side side, std::string target, std::string why) {
  BoundRecord r;
  r.name = std::move(name);
  r.side = side;
  r.target = std::move(target);
  r.skipped = true;
  r.note = std::move(why);
  return r;
}

std::vector<BoundRecord> BoundReport::violations() const {
  std::vector<BoundRecord> out;
  for (const BoundRecord& r : records)
    if (!r.holds && !r.skipped && !r.informational) out.push_back(r);
  return out;
}

const BoundRecord* BoundReport::find(const std::string& name) const {
  for (const BoundRecord& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

void require_spectrum(const Graph& g, const Spectrum& s) {
  if (s.size() != g.order()) {
    throw DimensionError("spectrum has " + std::to_string(s.size()) + " values for a graph of order " +
                         std::to_string(g.order()));
  }
}

std::string indexed(const char* base, std::size_t k) {
  return std::string(base) + "[" + std::to_string(k + 1) + "]";
}

}  // namespace

std::vector<BoundRecord> radius_bounds(const Graph& g, Alpha alpha, const Spectrum& s) {
  require_spectrum(g, s);
  std::vector<BoundRecord> out;
  const std::size_t n = g.order();
  if (n == 0) return out;

  const double a = alpha.value();
  const double lambda = s.largest();
  const double delta_max = static_cast<double>(g.max_degree());
  const double delta_min = static_cast<double>(g.min_degree());
  const std::vector<double> adj = eigenvalues(assemble(g, MatrixKind::adjacency));
  const std::vector<std::size_t> deg = g.sorted_degrees();

  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(make_record(indexed("degree", k), Side::upper_on, indexed("lambda", k),
                              static_cast<double>(deg[k]), s.values[k]));
  }
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(make_record(indexed("weyl_lower", k), Side::lower_on, indexed("lambda", k),
                              a * delta_min + (1.0 - a) * adj[k], s.values[k]));
    out.push_back(make_record(indexed("weyl_upper", k), Side::upper_on, indexed("lambda", k),
                              a * delta_max + (1.0 - a) * adj[k], s.values[k]));
  }

  if (g.max_degree() == 0) {
    out.push_back(skipped_record("lovasz", Side::lower_on, "lambda_1", "no edges"));
    out.push_back(skipped_record("corlo", Side::lower_on, "lambda_1", "no edges"));
  } else {
    const double d1 = delta_max + 1.0;
    out.push_back(make_record(
        "lovasz", Side::lower_on, "lambda_1",
        0.5 * (a * d1 + std::sqrt(a * a * d1 * d1 + 4.0 * delta_max * (1.0 - 2.0 * a))), lambda));
    if (a <= 0.5) {
      out.push_back(make_record("corlo", Side::lower_on, "lambda_1", a * d1, lambda));
    } else {
      // The star radius solves (λ - αΔ)(λ - α) = (1-α)²Δ, and that quadratic is
      // nonpositive at αΔ + (1-α)²/α once α >= 1/2.
      out.push_back(make_record("corlo", Side::lower_on, "lambda_1",
                                a * delta_max + (1.0 - a) * (1.0 - a) / a, lambda));
      BoundRecord literal = make_record("corlo_literal", Side::lower_on, "lambda_1",
                                        a * delta_max + 1.0 - a, lambda);
      literal.informational = true;
      literal.note = "as printed; fails for stars when alpha > 1/2";
      out.push_back(literal);
    }
  }

  out.push_back(make_record("bolo", Side::lower_on, "lambda_1", adj.front(), lambda));
  out.push_back(make_record("boup", Side::upper_on, "lambda_1",
                            a * delta_max + (1.0 - a) * adj.front(), lambda));

  const double nn = static_cast<double>(n);
  out.push_back(make_record("mean_degree", Side::lower_on, "lambda_1",
                            2.0 * static_cast<double>(g.size()) / nn, lambda));
  double sum_sq = 0.0;
  for (std::size_t d : g.degrees()) sum_sq += static_cast<double>(d) * static_cast<double>(d);
  out.push_back(make_record("rms_degree", Side::lower_on, "lambda_1", std::sqrt(sum_sq / nn), lambda));

  const std::vector<std::size_t> w = walk2_counts(g);
  if (g.has_isolated_vertex()) {
    out.push_back(skipped_record("merris_upper", Side::upper_on, "lambda_1", "isolated vertex"));
    out.push_back(skipped_record("merris_lower", Side::lower_on, "lambda_1", "isolated vertex"));
  } else {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (Vertex v = 0; v < n; ++v) {
      const double d = static_cast<double>(g.degree(v));
      const double row = a * d + (1.0 - a) * static_cast<double>(w[v]) / d;
      hi = std::max(hi, row);
      lo = std::min(lo, row);
    }
    out.push_back(make_record("merris_upper", Side::upper_on, "lambda_1", hi, lambda));
    out.push_back(make_record("merris_lower", Side::lower_on, "lambda_1", lo, lambda));
  }

  if (g.size() == 0) {
    out.push_back(skipped_record("edge_upper", Side::upper_on, "lambda_1", "no edges"));
    out.push_back(skipped_record("edge_lower", Side::lower_on, "lambda_1", "no edges"));
  } else {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges()) {
      const double du = static_cast<double>(g.degree(e.u));
      const double dv = static_cast<double>(g.degree(e.v));
      for (const auto& [x, y] : {std::pair{du, dv}, std::pair{dv, du}}) {
        const double val = a * x + (1.0 - a) * y;
        hi = std::max(hi, val);
        lo = std::min(lo, val);
      }
    }
    out.push_back(make_record("edge_upper", Side::upper_on, "lambda_1", hi, lambda));
    out.push_back(make_record("edge_lower", Side::lower_on, "lambda_1", lo, lambda));
  }

  double walk_hi = -std::numeric_limits<double>::infinity();
  double walk_lo = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v));
    const double row = a * d * d + (1.0 - a) * static_cast<double>(w[v]);
    walk_hi = std::max(walk_hi, row);
    walk_lo = std::min(walk_lo, row);
  }
  out.push_back(make_record("walk_upper", Side::upper_on, "lambda_1^2", walk_hi, lambda * lambda));
  out.push_back(make_record("walk_lower", Side::lower_on, "lambda_1^2", walk_lo, lambda * lambda));
  return out;
}

std::vector<BoundRecord> lambda_min_bounds(const Graph& g, Alpha alpha, const Spectrum& s) {
  require_spectrum(g, s);
  std::vector<BoundRecord> out;
  const std::size_t n = g.order();
  if (n == 0) return out;

  const double a = alpha.value();
  const double lmin = s.smallest();
  const double nn = static_cast<double>(n);
  const double m = static_cast<double>(g.size());

  BoundRecord das = make_record("das", Side::upper_on, "lambda_min",
                                a * static_cast<double>(g.min_degree()), lmin);
  das.strict = a < 1.0;
  out.push_back(das);

  if (n > kMaxcutLimit) {
    out.push_back(skipped_record("maxcut", Side::upper_on, "lambda_min", "n > 24"));
  } else {
    const double cut = static_cast<double>(maxcut(g));
    out.push_back(make_record("maxcut", Side::upper_on, "lambda_min",
                              (2.0 * m - 4.0 * (1.0 - a) * cut) / nn, lmin));
    BoundRecord literal = make_record("maxcut_literal", Side::upper_on, "lambda_min",
                                      (2.0 * a * m - 2.0 * (1.0 - a) * cut) / nn, lmin);
    literal.informational = true;
    literal.note = "as printed; the +-1 vector gives 2m - 4(1-a)cut";
    out.push_back(literal);
  }

  if (!g.is_regular() || g.size() == 0) {
    out.push_back(skipped_record("hoffman", Side::upper_on, "lambda_min", "not regular with edges"));
  } else if (n > kChromaticLimit) {
    out.push_back(skipped_record("hoffman", Side::upper_on, "lambda_min", "n > 16"));
  } else {
    const double chi = static_cast<double>(chromatic_number(g));
    const double d = static_cast<double>(g.max_degree());
    BoundRecord h = make_record("hoffman", Side::upper_on, "lambda_min",
                                a * d - (1.0 - a) * d / (chi - 1.0), lmin);
    h.strict = a < 1.0 / chi;
    h.note = h.strict ? "alpha < 1/chi: not PSD" : "alpha >= 1/chi";
    out.push_back(h);
  }
  return out;
}

std::vector<BoundRecord> global_identities(const Graph& g, Alpha alpha, const Spectrum& s) {
  require_spectrum(g, s);
  std::vector<BoundRecord> out;
  const std::size_t n = g.order();
  if (n == 0) return out;

  const double a = alpha.value();
  const double m = static_cast<double>(g.size());
  const double nn = static_cast<double>(n);
  double sum = 0.0, sum_sq = 0.0, deg_sq = 0.0;
  for (double l : s.values) {
    sum += l;
    sum_sq += l * l;
  }
  for (std::size_t d : g.degrees()) deg_sq += static_cast<double>(d) * static_cast<double>(d);
  out.push_back(make_record("trace", Side::identity, "trace", 2.0 * a * m, sum));
  out.push_back(make_record("trace_sq", Side::identity, "trace_sq",
                            2.0 * (1.0 - a) * (1.0 - a) * m + a * a * deg_sq, sum_sq));

  if (n < 2) {
    out.push_back(skipped_record("lambda2", Side::upper_on, "lambda_2", "n < 2"));
  } else if (a >= 0.5) {
    out.push_back(make_record("lambda2", Side::upper_on, "lambda_2", a * nn - 1.0, s.values[1]));
  } else {
    out.push_back(make_record("lambda2", Side::upper_on, "lambda_2", nn / 2.0 - 1.0, s.values[1]));
  }

  const std::optional<std::size_t> diam = diameter(g);
  if (!diam) {
    out.push_back(skipped_record("diameter", Side::lower_on, "distinct", "disconnected"));
  } else if (a == 1.0) {
    out.push_back(skipped_record("diameter", Side::lower_on, "distinct", "alpha = 1"));
  } else {
    out.push_back(make_record("diameter", Side::lower_on, "distinct",
                              static_cast<double>(*diam + 1),
                              static_cast<double>(distinct_count(s))));
  }
  return out;
}

BoundReport evaluate_all(const Graph& g, Alpha alpha, const Spectrum& s, std::string graph_id) {
  BoundReport report;
  report.graph_id = std::move(graph_id);
  report.alpha = alpha.value();
  for (auto* part : {&radius_bounds, &lambda_min_bounds, &global_identities}) {
    std::vector<BoundRecord> r = part(g, alpha, s);
    report.records.insert(report.records.end(), std::make_move_iterator(r.begin()),
                          std::make_move_iterator(r.end()));
  }
  return report;
}

BoundReport evaluate_all(const Graph& g, Alpha alpha, std::string graph_id) {
  return evaluate_all(g, alpha, full_spectrum(alpha_matrix(g, alpha)), std::move(graph_id));
}

bool rotation_test(const Graph& g, Alpha alpha, Vertex u, Vertex v, Vertex w) {
  if (alpha.value() >= 1.0) throw ParameterError("rotation_test: requires alpha < 1");
  if (!is_connected(g)) throw ParameterError("rotation_test: graph must be connected");
  const Graph h = rotate_edge(g, u, v, w);

  const EigenPair p = extreme_pair(alpha_matrix(g, alpha), Extreme::largest);
  const std::vector<double>& x = p.vector;
  const double a = alpha.value();
  // <A_α(H)x,x> - <A_α(G)x,x>: only the two rotated edges contribute.
  const double change = a * (x[w] * x[w] - x[v] * x[v]) + 2.0 * (1.0 - a) * x[u] * (x[w] - x[v]);
  if (change < -1e-12) return false;

  const double lh = full_spectrum(alpha_matrix(h, alpha)).largest();
  if (!(lh > p.value + 1e-10)) {
    throw ConsistencyError("rotation_test: hypothesis holds but lambda_1(H)=" + std::to_string(lh) +
                           " does not exceed lambda_1(G)=" + std::to_string(p.value));
  }
  return true;
}

}  // namespace aalpha
