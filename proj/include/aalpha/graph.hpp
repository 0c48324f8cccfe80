#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace aalpha {

using Vertex = std::size_t;

// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected labeled graph on vertices 0..n-1.
//
// Immutable after construction. Keeps the sorted edge set, per-vertex sorted
// neighbor lists, the degree sequence and a dense adjacency bitmap for O(1)
// adjacency queries. Construction rejects self-loops, out-of-range endpoints
// and duplicate edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }

  bool adjacent(Vertex u, Vertex v) const {
    return u != v && bitmap_[u * n_ + v] != 0;
  }

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular() const;
  bool has_isolated_vertex() const;

  // Degrees sorted descending: d(1) >= ... >= d(n).
  std::vector<std::size_t> sorted_degrees() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::size_t> degrees_;
  std::vector<std::uint8_t> bitmap_;
};

// Structured graph families.
namespace family {
struct Complete { std::size_t n; };
struct CompleteBipartite { std::size_t a, b; };
struct Star { std::size_t n; };  // K_{1,n-1}, center is vertex 0
struct Turan { std::size_t n, r; };
struct Split { std::size_t n, k; };  // K_k joined to an independent set of n-k
struct CompleteMultipartite { std::vector<std::size_t> parts; };
struct Cycle { std::size_t n; };
struct Path { std::size_t n; };
}  // namespace family

using FamilyMember =
    std::variant<family::Complete, family::CompleteBipartite, family::Star,
                 family::Turan, family::Split, family::CompleteMultipartite,
                 family::Cycle, family::Path>;

// Builds the labeled graph for a family member. Multipartite families place
// their parts in consecutive vertex blocks; Split puts the clique first.
// Throws ParameterError naming the violated constraint.
Graph build(const FamilyMember& member);

// Part sizes of T_r(n), largest parts first.
std::vector<std::size_t> turan_parts(std::size_t n, std::size_t r);

Graph edgeless(std::size_t n);

Graph disjoint_union(std::span<const Graph> parts);
Graph join(const Graph& g, const Graph& h);

struct Component {
  Graph graph;                  // induced subgraph, relabeled 0..k-1
  std::vector<Vertex> vertices; // vertices[i] = original label of vertex i
};

// Connected components ordered by smallest original vertex.
std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// w(u) = sum of the degrees of u's neighbors (walks of length two from u).
std::vector<std::size_t> walk2_counts(const Graph& g);

// Longest shortest path, or nullopt when some pair is unreachable.
std::optional<std::size_t> diameter(const Graph& g);

// Replaces edge {u,v} by {u,w}. Requires {u,v} present and {u,w} absent.
Graph rotate_edge(const Graph& g, Vertex u, Vertex v, Vertex w);

}  // namespace aalpha
