#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"
#include "aalpha/parallel.hpp"

namespace aalpha {

inline constexpr double kTieTol = 1e-9;
// Labeled scans touch 2^(n(n-1)/2) masks; n = 7 is 2,097,152.
inline constexpr std::size_t kScanLimit = 7;
inline constexpr std::size_t kPartitionLimit = 60;

enum class ClassKind {
  clique_free,           // K_{r+1}-free
  r_chromatic,           // χ <= r
  complete_multipartite  // complete k-partite, 1 <= k <= r
};

struct GraphClass {
  ClassKind kind = ClassKind::clique_free;
  std::size_t r = 2;
};

std::string to_string(const GraphClass& cls);

// Independent membership test on a materialized graph.
bool in_class(const Graph& g, const GraphClass& cls);

// One isomorphism class of maximizers.
struct MaximizerGroup {
  Graph graph;                      // representative: lowest edge mask (or the partition's graph)
  std::uint64_t mask = 0;
  std::size_t labeled_count = 0;    // labeled maximizers in this class
  double radius = 0.0;
  std::vector<std::size_t> degrees; // descending
  std::vector<double> spectrum;     // descending
  std::vector<std::size_t> parts;   // complete_multipartite only
};

struct ExtremalResult {
  GraphClass cls;
  std::size_t n = 0;
  double alpha = 0.0;
  double max_radius = 0.0;
  std::vector<MaximizerGroup> maximizers;
  std::uint64_t examined = 0;  // class members evaluated
  std::uint64_t scanned = 0;   // labeled graphs visited (masks or partitions)
  double elapsed_ms = 0.0;
};

// Largest relative deviation of Σλ from 2αm and Σλ² from
// 2(1-α)²m + α²Σd², relative to max(1, |target|), over every solve.
struct TraceAudit {
  std::uint64_t solves = 0;
  double trace_error = 0.0;
  double trace_sq_error = 0.0;

  void record(double sum, double target, double sum_sq, double target_sq);
  void merge(const TraceAudit& other);
};

struct ScanResult {
  std::vector<ExtremalResult> per_alpha;  // same order as the α list
  TraceAudit audit;
};

// Exhaustive labeled scan over the class for every α in one pass over the
// edge masks. The mask interval is split into contiguous chunks; chunk
// results are merged in chunk order, so both execution paths agree exactly.
// n <= 7 for clique_free and r_chromatic; n <= 60 for complete_multipartite.
ScanResult scan_class(std::size_t n, const GraphClass& cls, std::span<const Alpha> alphas,
                      Execution exec = Execution::parallel, double tie_tol = kTieTol);

ExtremalResult maximize_over_class(std::size_t n, const GraphClass& cls, Alpha alpha,
                                   Execution exec = Execution::parallel);

// Partitions of n into at most `max_parts` parts, each nonincreasing, in
// reverse lexicographic order.
std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_parts);

enum class Expectation { turan, split, tie, skipped };

const char* to_string(Expectation e);

struct TuranCheck {
  double alpha = 0.0;
  Expectation expected = Expectation::turan;
  double expected_radius = 0.0;
  ExtremalResult result;
  bool ok = true;
  std::string message;
  std::vector<Graph> counterexamples;  // maximizers that should not be
};

struct TuranReport {
  std::size_t n = 0;
  std::size_t r = 0;
  GraphClass cls;
  std::vector<TuranCheck> checks;
  TraceAudit audit;

  bool ok() const;
};

// For each α: below 1-1/r the unique maximizer up to isomorphism must be
// T_r(n); strictly between 1-1/r and 1 it must be S_{n,r-1}; at 1-1/r the
// maximum must equal (1-1/r)n and the maximizers must be exactly the complete
// r-partite graphs. α = 1 is skipped. 2 <= r <= n.
TuranReport verify_turan(std::size_t n, std::size_t r, std::span<const Alpha> grid,
                         ClassKind kind = ClassKind::clique_free,
                         Execution exec = Execution::parallel);

struct MonotonicityReport {
  bool ok = true;
  std::vector<std::string> violations;
  double min_increment = 0.0;         // min over k, steps of λ_k(β) - λ_k(α)
  double max_lipschitz_excess = 0.0;  // max of |Δλ_k| - (β-α)n
  double min_convexity = 0.0;         // min second difference of λ_1
  double max_concavity = 0.0;         // max second difference of λ_n
  double min_strict_margin = 0.0;     // over k that must increase strictly
  bool strict_checked = false;
  TraceAudit audit;
};

// Monotonicity, Lipschitz, convexity of λ_1 and concavity of λ_n on the
// grid (sorted, >= 3 points). For connected graphs every λ_k must increase
// by more than 1e-10 per step, except λ_1 of a regular graph, which must
// stay constant.
MonotonicityReport monotonicity_check(const Graph& g, std::span<const Alpha> grid,
                                      Execution exec = Execution::parallel);

}  // namespace aalpha
