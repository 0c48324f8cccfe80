#include "aalpha/extremal.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "aalpha/closed_form.hpp"
#include "aalpha/combinatorics.hpp"
#include "aalpha/eigensolver.hpp"
#include "aalpha/enumerate.hpp"
#include "aalpha/error.hpp"

namespace aalpha {

std::string to_string(const GraphClass& cls) {
  const std::string r = std::to_string(cls.r);
  switch (cls.kind) {
    case ClassKind::clique_free: return "clique_free(" + std::to_string(cls.r + 1) + ")";
    case ClassKind::r_chromatic: return "r_chromatic(" + r + ")";
    case ClassKind::complete_multipartite: return "complete_multipartite(" + r + ")";
  }
  return "?";
}

bool in_class(const Graph& g, const GraphClass& cls) {
  switch (cls.kind) {
    case ClassKind::clique_free: return is_clique_free(g, cls.r + 1);
    case ClassKind::r_chromatic: return chromatic_number(g) <= cls.r;
    case ClassKind::complete_multipartite:
      for (std::size_t k = 1; k <= cls.r; ++k)
        if (is_complete_multipartite(g, k)) return true;
      return false;
  }
  return false;
}

void TraceAudit::record(double sum, double target, double sum_sq, double target_sq) {
  ++solves;
  trace_error = std::max(trace_error, std::abs(sum - target) / std::max(1.0, std::abs(target)));
  trace_sq_error =
      std::max(trace_sq_error, std::abs(sum_sq - target_sq) / std::max(1.0, std::abs(target_sq)));
}

void TraceAudit::merge(const TraceAudit& other) {
  solves += other.solves;
  trace_error = std::max(trace_error, other.trace_error);
  trace_sq_error = std::max(trace_sq_error, other.trace_sq_error);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Tie {
  std::uint64_t mask;
  double value;
};

// Best value seen and every entry within tol of it.
struct Accumulator {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<Tie> ties;

  void offer(std::uint64_t mask, double value, double tol) {
    if (value > best) {
      best = value;
      std::erase_if(ties, [&](const Tie& t) { return t.value < best - tol; });
    }
    if (value >= best - tol) ties.push_back({mask, value});
  }
};

struct ChunkResult {
  std::vector<Accumulator> acc;
  TraceAudit audit;
  std::uint64_t examined = 0;
  std::string error;
};

bool packed_member(const PackedGraph& g, const GraphClass& cls) {
  if (cls.kind == ClassKind::clique_free) return !packed_has_clique(g, cls.r + 1);
  return packed_colorable(g, cls.r);
}

void scan_chunk(const EdgeTable& table, MaskRange range, const GraphClass& cls,
                std::span<const double> alphas, double tol, ChunkResult& out) {
  const std::size_t n = table.order();
  std::array<double, kPackedLimit * kPackedLimit> a;
  std::array<double, kPackedLimit> values;
  std::array<double, kPackedLimit> scratch;
  out.acc.assign(alphas.size(), Accumulator{});

  for (std::uint64_t mask = range.begin; mask < range.end; ++mask) {
    const PackedGraph g = PackedGraph::from_mask(table, mask);
    if (!packed_member(g, cls)) continue;
    ++out.examined;
    const double m = static_cast<double>(g.edge_count());
    double deg_sq = 0.0;
    for (std::size_t v = 0; v < n; ++v) deg_sq += static_cast<double>(g.degree(v) * g.degree(v));

    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const double al = alphas[i];
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v)
          a[u * n + v] = (g.rows[u] >> v & 1u) ? 1.0 - al : 0.0;
        a[u * n + u] = al * static_cast<double>(g.degree(u));
      }
      if (!symmetric_eigenvalues_in_place({a.data(), n * n}, n, {values.data(), n},
                                          {scratch.data(), n})) {
        out.error = "eigensolver did not converge for mask " + std::to_string(mask);
        return;
      }
      double sum = 0.0, sum_sq = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += values[k];
        sum_sq += values[k] * values[k];
      }
      out.audit.record(sum, 2.0 * al * m, sum_sq,
                       2.0 * (1.0 - al) * (1.0 - al) * m + al * al * deg_sq);
      out.acc[i].offer(mask, values[n - 1], tol);
    }
  }
}

std::vector<double> descending_spectrum(const Graph& g, Alpha alpha) {
  return eigenvalues(alpha_matrix(g, alpha));
}

bool same_fingerprint(const MaximizerGroup& grp, const std::vector<std::size_t>& degrees,
                      const std::vector<double>& spectrum) {
  if (grp.degrees != degrees) return false;
  for (std::size_t k = 0; k < spectrum.size(); ++k)
    if (std::abs(grp.spectrum[k] - spectrum[k]) > 1e-8) return false;
  return true;
}

// Groups labeled maximizers (sorted by mask) into isomorphism classes.
std::vector<MaximizerGroup> group_ties(std::size_t n, const GraphClass& cls, Alpha alpha,
                                       std::vector<Tie> ties) {
  std::sort(ties.begin(), ties.end(), [](const Tie& x, const Tie& y) { return x.mask < y.mask; });
  std::vector<MaximizerGroup> groups;
  for (const Tie& t : ties) {
    Graph g = graph_from_mask(n, t.mask);
    if (!in_class(g, cls))
      throw ConsistencyError("maximizer with mask " + std::to_string(t.mask) + " is not in " +
                             to_string(cls));
    std::vector<std::size_t> degrees = g.sorted_degrees();
    std::vector<double> spectrum = descending_spectrum(g, alpha);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const MaximizerGroup& grp) {
      return same_fingerprint(grp, degrees, spectrum) && are_isomorphic(grp.graph, g);
    });
    if (it != groups.end()) {
      ++it->labeled_count;
      it->radius = std::max(it->radius, t.value);
      continue;
    }
    MaximizerGroup grp;
    grp.graph = std::move(g);
    grp.mask = t.mask;
    grp.labeled_count = 1;
    grp.radius = t.value;
    grp.degrees = std::move(degrees);
    grp.spectrum = std::move(spectrum);
    groups.push_back(std::move(grp));
  }
  return groups;
}

void gen_partitions(std::size_t left, std::size_t max_part, std::size_t parts_left,
                    std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(left - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

ScanResult scan_partitions(std::size_t n, const GraphClass& cls, std::span<const Alpha> alphas,
                           double tol) {
  if (n > kPartitionLimit) {
    throw CapacityError("complete_multipartite: n=" + std::to_string(n) + " exceeds limit " +
                        std::to_string(kPartitionLimit));
  }
  const auto t0 = Clock::now();
  const std::vector<std::vector<std::size_t>> parts = partitions(n, cls.r);
  ScanResult out;
  for (Alpha alpha : alphas) {
    std::vector<double> radius(parts.size());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::vector<std::size_t>& p = parts[i];
      if (p.size() == 1) radius[i] = 0.0;
      else if (alpha.value() == 1.0) radius[i] = static_cast<double>(n - p.back());
      else radius[i] = multipartite_radius(p, alpha);
      best = std::max(best, radius[i]);
    }
    ExtremalResult res;
    res.cls = cls;
    res.n = n;
    res.alpha = alpha.value();
    res.max_radius = best;
    res.examined = res.scanned = parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (radius[i] < best - tol) continue;
      MaximizerGroup grp;
      grp.graph = build(family::CompleteMultipartite{parts[i]});
      grp.mask = n <= kPackedLimit ? edge_mask(grp.graph) : 0;
      grp.labeled_count = 1;
      grp.radius = radius[i];
      grp.degrees = grp.graph.sorted_degrees();
      grp.spectrum = spectrum_complete_multipartite(parts[i], alpha).expanded();
      grp.parts = parts[i];
      res.maximizers.push_back(std::move(grp));
    }
    res.elapsed_ms = ms_since(t0);
    out.per_alpha.push_back(std::move(res));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  gen_partitions(n, n, max_parts, cur, out);
  return out;
}

ScanResult scan_class(std::size_t n, const GraphClass& cls, std::span<const Alpha> alphas,
                      Execution exec, double tie_tol) {
  if (n < 1) throw ParameterError("scan_class: n must be >= 1");
  if (cls.r < 1) throw ParameterError("scan_class: r must be >= 1");
  if (!(tie_tol >= 0)) throw ParameterError("scan_class: tie_tol must be nonnegative");
  if (cls.kind == ClassKind::complete_multipartite) return scan_partitions(n, cls, alphas, tie_tol);
  if (n > kScanLimit) {
    throw CapacityError("scan_class: n=" + std::to_string(n) + " exceeds labeled scan limit " +
                        std::to_string(kScanLimit));
  }

  const auto t0 = Clock::now();
  const EdgeTable table(n);
  const MaskRange all = full_range(n);
  // Chunking is independent of the thread count so results never depend on it.
  const std::vector<MaskRange> chunks = split_range(all, std::min<std::uint64_t>(all.size(), 512));
  std::vector<double> alpha_values;
  for (Alpha a : alphas) alpha_values.push_back(a.value());

  std::vector<ChunkResult> results(chunks.size());
  const auto count = static_cast<std::int64_t>(chunks.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < count; ++c)
      scan_chunk(table, chunks[c], cls, alpha_values, tie_tol, results[c]);
  } else {
    for (std::int64_t c = 0; c < count; ++c)
      scan_chunk(table, chunks[c], cls, alpha_values, tie_tol, results[c]);
  }
  for (const ChunkResult& r : results)
    if (!r.error.empty()) throw SolverError("scan_class: " + r.error);

  ScanResult out;
  std::uint64_t examined = 0;
  for (const ChunkResult& r : results) {
    out.audit.merge(r.audit);
    examined += r.examined;
  }
  const double elapsed = ms_since(t0);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (const ChunkResult& r : results) best = std::max(best, r.acc[i].best);
    std::vector<Tie> ties;
    for (const ChunkResult& r : results)
      for (const Tie& t : r.acc[i].ties)
        if (t.value >= best - tie_tol) ties.push_back(t);

    ExtremalResult res;
    res.cls = cls;
    res.n = n;
    res.alpha = alpha_values[i];
    res.max_radius = best;
    res.examined = examined;
    res.scanned = all.size();
    res.maximizers = group_ties(n, cls, alphas[i], std::move(ties));
    res.elapsed_ms = elapsed;
    out.per_alpha.push_back(std::move(res));
  }
  return out;
}

ExtremalResult maximize_over_class(std::size_t n, const GraphClass& cls, Alpha alpha,
                                   Execution exec) {
  const Alpha one[] = {alpha};
  return std::move(scan_class(n, cls, one, exec).per_alpha.front());
}

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::turan: return "turan";
    case Expectation::split: return "split";
    case Expectation::tie: return "tie";
    case Expectation::skipped: return "skipped";
  }
  return "?";
}

bool TuranReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const TuranCheck& c) { return c.ok; });
}

namespace {

void check_unique(TuranCheck& c, const Graph& expected, const char* name, Alpha alpha) {
  c.expected_radius = full_spectrum(alpha_matrix(expected, alpha)).largest();
  const auto& groups = c.result.maximizers;
  const bool present = std::any_of(groups.begin(), groups.end(), [&](const MaximizerGroup& g) {
    return are_isomorphic(g.graph, expected);
  });
  for (const MaximizerGroup& g : groups)
    if (!are_isomorphic(g.graph, expected)) c.counterexamples.push_back(g.graph);
  if (!present) {
    c.ok = false;
    c.message = std::string(name) + " is not among the maximizers";
  } else if (groups.size() != 1) {
    c.ok = false;
    c.message = std::to_string(groups.size()) + " non-isomorphic maximizers";
  } else if (std::abs(c.result.max_radius - c.expected_radius) > kTieTol) {
    c.ok = false;
    c.message = "maximum differs from the radius of " + std::string(name);
  } else {
    c.message = std::string("unique maximizer ") + name;
  }
}

void check_tie(TuranCheck& c, std::size_t n, std::size_t r) {
  const double target = (1.0 - 1.0 / static_cast<double>(r)) * static_cast<double>(n);
  c.expected_radius = target;
  const auto& groups = c.result.maximizers;
  if (std::abs(c.result.max_radius - target) > kTieTol) {
    c.ok = false;
    c.message = "maximum " + std::to_string(c.result.max_radius) + " differs from (1-1/r)n";
    return;
  }
  for (const MaximizerGroup& g : groups)
    if (!is_complete_multipartite(g.graph, r)) c.counterexamples.push_back(g.graph);
  std::size_t missing = 0;
  for (const std::vector<std::size_t>& p : partitions(n, r)) {
    if (p.size() != r) continue;
    const Graph k = build(family::CompleteMultipartite{p});
    const bool found = std::any_of(groups.begin(), groups.end(), [&](const MaximizerGroup& g) {
      return are_isomorphic(g.graph, k);
    });
    if (!found) ++missing;
  }
  if (!c.counterexamples.empty()) {
    c.ok = false;
    c.message = std::to_string(c.counterexamples.size()) + " maximizers are not complete r-partite";
  } else if (missing > 0) {
    c.ok = false;
    c.message = std::to_string(missing) + " complete r-partite graphs fall short of (1-1/r)n";
  } else {
    c.message = "all complete r-partite graphs attain (1-1/r)n";
  }
}

}  // namespace

TuranReport verify_turan(std::size_t n, std::size_t r, std::span<const Alpha> grid,
                         ClassKind kind, Execution exec) {
  if (r < 2 || r > n) throw ParameterError("verify_turan: requires 2 <= r <= n");
  TuranReport report;
  report.n = n;
  report.r = r;
  report.cls = GraphClass{kind, r};

  const double boundary = 1.0 - 1.0 / static_cast<double>(r);
  std::vector<Alpha> active;
  for (Alpha a : grid)
    if (a.value() != 1.0) active.push_back(a);
  ScanResult scan = scan_class(n, report.cls, active, exec);
  report.audit = scan.audit;

  std::size_t next = 0;
  for (Alpha a : grid) {
    TuranCheck c;
    c.alpha = a.value();
    if (a.value() == 1.0) {
      c.expected = Expectation::skipped;
      c.message = "alpha = 1: spectrum is the degree multiset";
      report.checks.push_back(std::move(c));
      continue;
    }
    c.result = std::move(scan.per_alpha[next++]);
    if (std::abs(a.value() - boundary) <= 1e-12) {
      c.expected = Expectation::tie;
      check_tie(c, n, r);
    } else if (a.value() < boundary) {
      c.expected = Expectation::turan;
      check_unique(c, build(family::Turan{n, r}), "T_r(n)", a);
    } else {
      c.expected = Expectation::split;
      check_unique(c, build(family::Split{n, r - 1}), "S_{n,r-1}", a);
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

MonotonicityReport monotonicity_check(const Graph& g, std::span<const Alpha> grid, Execution exec) {
  if (grid.size() < 3) throw ParameterError("monotonicity_check: grid needs at least 3 points");
  const SweepTable table = alpha_sweep(g, grid, exec);
  const std::size_t n = g.order();
  const double nn = static_cast<double>(n);
  MonotonicityReport rep;
  if (n == 0) return rep;

  const double m = static_cast<double>(g.size());
  double deg_sq = 0.0;
  for (std::size_t d : g.degrees()) deg_sq += static_cast<double>(d) * static_cast<double>(d);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = table.alphas[i];
    double sum = 0.0, sum_sq = 0.0;
    for (double l : table.spectra[i].values) {
      sum += l;
      sum_sq += l * l;
    }
    rep.audit.record(sum, 2.0 * a * m, sum_sq, 2.0 * (1.0 - a) * (1.0 - a) * m + a * a * deg_sq);
  }

  const bool connected = is_connected(g);
  const bool regular = g.is_regular();
  rep.strict_checked = connected;
  rep.min_increment = std::numeric_limits<double>::infinity();
  rep.min_convexity = std::numeric_limits<double>::infinity();
  rep.max_concavity = -std::numeric_limits<double>::infinity();
  rep.min_strict_margin = std::numeric_limits<double>::infinity();
  rep.max_lipschitz_excess = -std::numeric_limits<double>::infinity();

  auto fail = [&](std::string what) {
    rep.ok = false;
    rep.violations.push_back(std::move(what));
  };
  auto at = [&](std::size_t i) { return std::to_string(table.alphas[i]); };

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double step = table.alphas[i + 1] - table.alphas[i];
    for (std::size_t k = 0; k < n; ++k) {
      const double diff = table.spectra[i + 1].values[k] - table.spectra[i].values[k];
      rep.min_increment = std::min(rep.min_increment, diff);
      rep.max_lipschitz_excess = std::max(rep.max_lipschitz_excess, std::abs(diff) - step * nn);
      if (diff < -1e-9) fail("lambda_" + std::to_string(k + 1) + " decreases after alpha=" + at(i));
      if (std::abs(diff) > step * nn + 1e-9)
        fail("lambda_" + std::to_string(k + 1) + " exceeds Lipschitz constant n after alpha=" + at(i));
      if (!connected) continue;
      if (k == 0 && regular) {
        if (std::abs(diff) > 1e-9) fail("lambda_1 of a regular graph changes after alpha=" + at(i));
        continue;
      }
      rep.min_strict_margin = std::min(rep.min_strict_margin, diff);
      if (!(diff > 1e-10))
        fail("lambda_" + std::to_string(k + 1) + " not strictly increasing after alpha=" + at(i));
    }
  }
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    // Second difference scaled to the right-hand step; equals the plain
    // second difference on a uniform grid.
    const double ratio = (table.alphas[i + 1] - table.alphas[i]) / (table.alphas[i] - table.alphas[i - 1]);
    auto second = [&](std::size_t k) {
      const double l0 = table.spectra[i - 1].values[k];
      const double l1 = table.spectra[i].values[k];
      const double l2 = table.spectra[i + 1].values[k];
      return (l2 - l1) - ratio * (l1 - l0);
    };
    const double top = second(0);
    const double bottom = second(n - 1);
    rep.min_convexity = std::min(rep.min_convexity, top);
    rep.max_concavity = std::max(rep.max_concavity, bottom);
    if (top < -1e-8) fail("lambda_1 not convex at alpha=" + at(i));
    if (bottom > 1e-8) fail("lambda_min not concave at alpha=" + at(i));
  }
  return rep;
}

}  // namespace aalpha
