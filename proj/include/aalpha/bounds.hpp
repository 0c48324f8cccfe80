#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "aalpha/eigensolver.hpp"
#include "aalpha/graph.hpp"
#include "aalpha/matrix.hpp"

namespace aalpha {

// upper_on: spectral value <= bound. lower_on: spectral value >= bound.
// identity: spectral value == bound.
enum class Side { upper_on, lower_on, identity };

const char* to_string(Side side);

inline constexpr double kBoundTol = 1e-9;

struct BoundRecord {
  std::string name;
  Side side = Side::upper_on;
  std::string target;  // lambda_1, lambda_k[i], lambda_min, lambda_2, lambda_1^2, trace, trace_sq, distinct
  double bound_value = 0.0;
  double spectral_value = 0.0;
  // bound - value for upper_on and identity, value - bound for lower_on;
  // nonnegative whenever the inequality holds exactly.
  double slack = 0.0;
  double tolerance = 0.0;
  bool holds = true;
  bool strict = false;         // the inequality is claimed strict; holds only checks <=
  bool informational = false;  // evaluated but never counted as a violation
  bool skipped = false;        // preconditions not met; bound_value is meaningless
  std::string note;
};

// Builds a record and decides `holds` with tolerance 1e-9·max(1, |bound|).
BoundRecord make_record(std::string name, Side side, std::string target, double bound,
                        double value);
BoundRecord skipped_record(std::string name, Side side, std::string target, std::string why);

struct BoundReport {
  std::string graph_id;
  double alpha = 0.0;
  std::vector<BoundRecord> records;

  // Records that failed and count: not skipped, not informational.
  std::vector<BoundRecord> violations() const;
  const BoundRecord* find(const std::string& name) const;
};

// Bounds on λ_1 and on every λ_k. `s` must be the spectrum of A_α(g).
std::vector<BoundRecord> radius_bounds(const Graph& g, Alpha alpha, const Spectrum& s);

// Bounds on λ_min: Das-type λ_min <= αδ, the maxcut bound
// λ_min <= 2m/n - 4(1-α)maxcut/n (n <= 24), and for regular graphs the
// Hoffman-type bound λ_min <= αd - (1-α)d/(χ-1) (n <= 16).
std::vector<BoundRecord> lambda_min_bounds(const Graph& g, Alpha alpha, const Spectrum& s);

// Trace identities, λ_2 bounds, distinct eigenvalues vs diameter.
std::vector<BoundRecord> global_identities(const Graph& g, Alpha alpha, const Spectrum& s);

BoundReport evaluate_all(const Graph& g, Alpha alpha, const Spectrum& s,
                         std::string graph_id = {});
BoundReport evaluate_all(const Graph& g, Alpha alpha, std::string graph_id = {});

// Rotates edge {u,v} to {u,w}, giving H. Returns whether the Perron vector x
// of A_α(G) satisfies <A_α(H)x,x> >= <A_α(G)x,x>. When it does, checks
// λ_1(H) > λ_1(G) + 1e-10 and throws ConsistencyError otherwise.
// Requires α < 1, g connected, {u,v} in E and {u,w} not in E.
bool rotation_test(const Graph& g, Alpha alpha, Vertex u, Vertex v, Vertex w);

}  // namespace aalpha
