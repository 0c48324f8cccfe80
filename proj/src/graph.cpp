#include "aalpha/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "aalpha/error.hpp"

namespace aalpha {

Graph::Graph(std::size_t n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), edges_(edges.begin(), edges.end()), adj_(n), degrees_(n, 0),
      bitmap_(n * n, 0) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= n_) {
      throw ParameterError("edge {" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + "} out of range for n=" +
                           std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw ParameterError("duplicate edge {" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + "}");
  }
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    ++degrees_[e.u];
    ++degrees_[e.v];
    bitmap_[e.u * n_ + e.v] = 1;
    bitmap_[e.v * n_ + e.u] = 1;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::size_t Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

bool Graph::is_regular() const { return min_degree() == max_degree(); }

bool Graph::has_isolated_vertex() const {
  return std::find(degrees_.begin(), degrees_.end(), 0u) != degrees_.end();
}

std::vector<std::size_t> Graph::sorted_degrees() const {
  std::vector<std::size_t> d = degrees_;
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

namespace {

Graph complete_multipartite(std::span<const std::size_t> parts) {
  std::size_t n = 0;
  std::vector<std::size_t> block;  // block[v] = part index
  for (std::size_t p = 0; p < parts.size(); ++p) {
    block.insert(block.end(), parts[p], p);
    n += parts[p];
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (block[u] != block[v]) edges.emplace_back(u, v);
  return Graph(n, edges);
}

void require(bool ok, const char* what) {
  if (!ok) throw ParameterError(what);
}

struct Builder {
  Graph operator()(const family::Complete& s) const {
    require(s.n >= 1, "Complete: n >= 1 required");
    return complete_multipartite(std::vector<std::size_t>(s.n, 1));
  }
  Graph operator()(const family::CompleteBipartite& s) const {
    require(s.a >= 1 && s.b >= 1, "CompleteBipartite: a >= 1 and b >= 1 required");
    const std::size_t parts[] = {s.a, s.b};
    return complete_multipartite(parts);
  }
  Graph operator()(const family::Star& s) const {
    require(s.n >= 1, "Star: n >= 1 required");
    if (s.n == 1) return Graph(1);
    const std::size_t parts[] = {1, s.n - 1};
    return complete_multipartite(parts);
  }
  Graph operator()(const family::Turan& s) const {
    require(s.n >= 1 && s.r >= 1, "Turan: n >= 1 and r >= 1 required");
    require(s.r <= s.n, "Turan: r <= n required");
    return complete_multipartite(turan_parts(s.n, s.r));
  }
  Graph operator()(const family::Split& s) const {
    require(s.n >= 1 && s.k >= 1, "Split: n >= 1 and k >= 1 required");
    require(s.k < s.n, "Split: k < n required");
    std::vector<std::size_t> parts(s.k, 1);
    parts.push_back(s.n - s.k);
    return complete_multipartite(parts);
  }
  Graph operator()(const family::CompleteMultipartite& s) const {
    require(!s.parts.empty(), "CompleteMultipartite: at least one part required");
    for (std::size_t p : s.parts)
      require(p >= 1, "CompleteMultipartite: part sizes >= 1 required");
    return complete_multipartite(s.parts);
  }
  Graph operator()(const family::Cycle& s) const {
    require(s.n >= 3, "Cycle: n >= 3 required");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < s.n; ++v) edges.emplace_back(v, (v + 1) % s.n);
    return Graph(s.n, edges);
  }
  Graph operator()(const family::Path& s) const {
    require(s.n >= 1, "Path: n >= 1 required");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < s.n; ++v) edges.emplace_back(v, v + 1);
    return Graph(s.n, edges);
  }
};

}  // namespace

std::vector<std::size_t> turan_parts(std::size_t n, std::size_t r) {
  if (r == 0 || r > n) throw ParameterError("Turan: 1 <= r <= n required");
  std::vector<std::size_t> parts(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++parts[i];
  return parts;
}

Graph build(const FamilyMember& member) { return std::visit(Builder{}, member); }

Graph edgeless(std::size_t n) { return Graph(n); }

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t offset = 0;
  std::vector<Edge> edges;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    offset += g.order();
  }
  return Graph(offset, edges);
}

Graph join(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + ng, e.v + ng);
  for (Vertex u = 0; u < ng; ++u)
    for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(u, ng + v);
  return Graph(ng + h.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::size_t> local(g.order(), g.order());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw ParameterError("induced_subgraph: vertex out of range");
    local[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.u] != g.order() && local[e.v] != g.order())
      edges.emplace_back(local[e.u], local[e.v]);
  return Graph(vertices.size(), edges);
}

std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members{s};
    seen[s] = true;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Vertex w : g.neighbors(members[head]))
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
    std::sort(members.begin(), members.end());
    Graph sub = induced_subgraph(g, members);
    out.push_back(Component{std::move(sub), std::move(members)});
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

std::vector<std::size_t> walk2_counts(const Graph& g) {
  std::vector<std::size_t> w(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) w[u] += g.degree(v);
  return w;
}

std::optional<std::size_t> diameter(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u))
        if (dist[v] == kUnseen) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    for (std::size_t d : dist) {
      if (d == kUnseen) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

Graph rotate_edge(const Graph& g, Vertex u, Vertex v, Vertex w) {
  const std::size_t n = g.order();
  if (u >= n || v >= n || w >= n) throw ParameterError("rotate_edge: vertex out of range");
  if (u == w) throw ParameterError("rotate_edge: u and w must differ");
  if (!g.adjacent(u, v)) throw ParameterError("rotate_edge: {u,v} must be an edge");
  if (g.adjacent(u, w)) throw ParameterError("rotate_edge: {u,w} must not be an edge");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  const Edge removed(u, v);
  for (const Edge& e : g.edges())
    if (e != removed) edges.push_back(e);
  edges.emplace_back(u, w);
  return Graph(n, edges);
}

}  // namespace aalpha
