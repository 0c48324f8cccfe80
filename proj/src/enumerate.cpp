#include "aalpha/enumerate.hpp"

#include <string>

#include "aalpha/error.hpp"

namespace aalpha {

EdgeTable::EdgeTable(std::size_t n) : n_(n) {
  if (n > kPackedLimit) {
    throw CapacityError("edge table: n=" + std::to_string(n) + " exceeds packed limit " +
                        std::to_string(kPackedLimit));
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots_.emplace_back(u, v);
}

std::size_t EdgeTable::index(Vertex u, Vertex v) const {
  const Edge e(u, v);
  // Slots before row u: u*(n-1) - u*(u-1)/2.
  return e.u * (n_ - 1) - e.u * (e.u - (e.u > 0)) / 2 + (e.v - e.u - 1);
}

PackedGraph PackedGraph::from_mask(const EdgeTable& table, std::uint64_t mask) {
  PackedGraph g;
  g.n = table.order();
  g.mask = mask;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    const Edge& e = table.slot(static_cast<std::size_t>(std::countr_zero(m)));
    g.rows[e.u] |= std::uint32_t{1} << e.v;
    g.rows[e.v] |= std::uint32_t{1} << e.u;
  }
  return g;
}

Graph PackedGraph::to_graph(const EdgeTable& table) const {
  std::vector<Edge> edges;
  for (std::uint64_t m = mask; m; m &= m - 1)
    edges.push_back(table.slot(static_cast<std::size_t>(std::countr_zero(m))));
  return Graph(n, edges);
}

std::uint64_t edge_mask(const Graph& g) {
  const EdgeTable table(g.order());
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges()) mask |= std::uint64_t{1} << table.index(e.u, e.v);
  return mask;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  const EdgeTable table(n);
  if (table.slots() < 64 && (mask >> table.slots()) != 0)
    throw ParameterError("edge mask has bits beyond n(n-1)/2");
  return PackedGraph::from_mask(table, mask).to_graph(table);
}

namespace {

bool clique_in(const PackedGraph& g, std::uint32_t candidates, std::size_t k) {
  if (k == 0) return true;
  while (candidates) {
    if (static_cast<std::size_t>(std::popcount(candidates)) < k) return false;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (clique_in(g, candidates & g.rows[v], k - 1)) return true;
  }
  return false;
}

bool color_packed(const PackedGraph& g, std::size_t v, std::size_t k, std::size_t used,
                  std::array<int, kPackedLimit>& colors) {
  if (v == g.n) return true;
  std::uint32_t blocked = 0;
  for (std::uint32_t nb = g.rows[v]; nb; nb &= nb - 1) {
    const int c = colors[std::countr_zero(nb)];
    if (c >= 0) blocked |= 1u << c;
  }
  const std::size_t limit = used + 1 < k ? used + 1 : k;
  for (std::size_t c = 0; c < limit; ++c) {
    if (blocked >> c & 1u) continue;
    colors[v] = static_cast<int>(c);
    if (color_packed(g, v + 1, k, used > c + 1 ? used : c + 1, colors)) return true;
  }
  colors[v] = -1;
  return false;
}

}  // namespace

bool packed_has_clique(const PackedGraph& g, std::size_t k) {
  if (k > g.n) return false;
  const std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
  return clique_in(g, all, k);
}

bool packed_colorable(const PackedGraph& g, std::size_t k) {
  if (g.n == 0) return true;
  if (k == 0) return false;
  std::array<int, kPackedLimit> colors;
  colors.fill(-1);
  return color_packed(g, 0, k, 0, colors);
}

MaskRange full_range(std::size_t n) {
  if (n > kEnumerationLimit) {
    throw CapacityError("enumerate_graphs: n=" + std::to_string(n) + " exceeds limit " +
                        std::to_string(kEnumerationLimit));
  }
  return MaskRange{0, std::uint64_t{1} << edge_slots(n)};
}

std::vector<MaskRange> split_range(MaskRange range, std::size_t chunks) {
  if (chunks == 0) chunks = 1;
  std::vector<MaskRange> out;
  const std::uint64_t total = range.size();
  const std::uint64_t base = total / chunks;
  const std::uint64_t extra = total % chunks;
  std::uint64_t at = range.begin;
  for (std::size_t i = 0; i < chunks; ++i) {
    const std::uint64_t len = base + (i < extra ? 1 : 0);
    out.push_back(MaskRange{at, at + len});
    at += len;
  }
  return out;
}

GraphStream::GraphStream(std::size_t n, std::optional<GraphFilter> filter)
    : GraphStream(n, full_range(n), std::move(filter)) {}

GraphStream::GraphStream(std::size_t n, MaskRange range, std::optional<GraphFilter> filter)
    : table_(n), range_(range), cursor_(range.begin), filter_(std::move(filter)) {
  const MaskRange all = full_range(n);
  if (range.begin > range.end || range.end > all.end)
    throw ParameterError("GraphStream: range outside [0, 2^(n(n-1)/2))");
}

std::optional<Graph> GraphStream::next() {
  while (cursor_ < range_.end) {
    last_mask_ = cursor_++;
    Graph g = PackedGraph::from_mask(table_, last_mask_).to_graph(table_);
    if (!filter_ || (*filter_)(g)) return g;
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::optional<GraphFilter> filter) {
  GraphStream stream(n, std::move(filter));
  std::vector<Graph> out;
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace aalpha
