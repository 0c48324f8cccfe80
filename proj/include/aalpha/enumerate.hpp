#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "aalpha/graph.hpp"

namespace aalpha {

// Largest order for exhaustive labeled enumeration (2^28 edge subsets).
inline constexpr std::size_t kEnumerationLimit = 8;
// Largest order whose edge set fits a 64-bit mask.
inline constexpr std::size_t kPackedLimit = 11;

constexpr std::size_t edge_slots(std::size_t n) { return n * (n - (n > 0)) / 2; }

// Edge i of K_n in lexicographic order (0,1),(0,2),...,(n-2,n-1).
// Bit i of an edge mask selects slot i.
class EdgeTable {
 public:
  explicit EdgeTable(std::size_t n);
  std::size_t order() const { return n_; }
  std::size_t slots() const { return slots_.size(); }
  const Edge& slot(std::size_t i) const { return slots_[i]; }
  std::size_t index(Vertex u, Vertex v) const;

 private:
  std::size_t n_;
  std::vector<Edge> slots_;
};

// Allocation-free graph view used in the enumeration hot path: one adjacency
// bit row per vertex.
struct PackedGraph {
  std::size_t n = 0;
  std::uint64_t mask = 0;
  std::array<std::uint32_t, kPackedLimit> rows{};

  static PackedGraph from_mask(const EdgeTable& table, std::uint64_t mask);

  std::size_t degree(std::size_t v) const { return std::popcount(rows[v]); }
  std::size_t edge_count() const { return std::popcount(mask); }
  Graph to_graph(const EdgeTable& table) const;
};

// Edge mask of g under the lexicographic slot order. Requires n <= 11.
std::uint64_t edge_mask(const Graph& g);
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

bool packed_has_clique(const PackedGraph& g, std::size_t k);
bool packed_colorable(const PackedGraph& g, std::size_t k);

// Half-open interval of edge masks.
struct MaskRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t size() const { return end - begin; }
};

// The full interval [0, 2^(n(n-1)/2)). Throws CapacityError for n > 8.
MaskRange full_range(std::size_t n);

// Splits a range into `chunks` contiguous pieces covering it exactly, in
// increasing order. Pieces differ in size by at most one.
std::vector<MaskRange> split_range(MaskRange range, std::size_t chunks);

// Calls fn(const PackedGraph&) for every mask in the range, in increasing
// mask order.
template <typename Fn>
void for_each_packed(const EdgeTable& table, MaskRange range, Fn&& fn) {
  for (std::uint64_t mask = range.begin; mask < range.end; ++mask)
    fn(PackedGraph::from_mask(table, mask));
}

using GraphFilter = std::function<bool(const Graph&)>;

// Pull-style stream over labeled graphs on n vertices in edge-mask order,
// optionally filtered. Independent streams over disjoint sub-ranges may be
// consumed by different threads.
class GraphStream {
 public:
  GraphStream(std::size_t n, std::optional<GraphFilter> filter = std::nullopt);
  GraphStream(std::size_t n, MaskRange range, std::optional<GraphFilter> filter = std::nullopt);

  // Next graph passing the filter, or nullopt when exhausted.
  std::optional<Graph> next();
  std::uint64_t current_mask() const { return last_mask_; }

 private:
  EdgeTable table_;
  MaskRange range_;
  std::uint64_t cursor_;
  std::uint64_t last_mask_ = 0;
  std::optional<GraphFilter> filter_;
};

// Every labeled graph on n vertices passing the optional filter.
std::vector<Graph> enumerate_graphs(std::size_t n,
                                    std::optional<GraphFilter> filter = std::nullopt);

}  // namespace aalpha
