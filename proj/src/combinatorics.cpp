#include "aalpha/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "aalpha/error.hpp"

namespace aalpha {

namespace {

void require_capacity(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw CapacityError(std::string(what) + ": n=" + std::to_string(n) +
                        " exceeds limit " + std::to_string(limit));
  }
}

std::vector<std::uint64_t> bit_rows(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= std::uint64_t{1} << e.v;
    rows[e.v] |= std::uint64_t{1} << e.u;
  }
  return rows;
}

// Extends `clique` by vertices from `candidates` (all adjacent to every
// clique member). Returns true once a clique of `target` vertices exists.
bool extend_clique(const Graph& g, std::size_t size, std::vector<Vertex>& candidates,
                   std::size_t target) {
  if (size >= target) return true;
  if (size + candidates.size() < target) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (size + (candidates.size() - i) < target) return false;
    const Vertex v = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    if (extend_clique(g, size + 1, next, target)) return true;
  }
  return false;
}

bool has_clique(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  if (k > g.order()) return false;
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  return extend_clique(g, 0, all, k);
}

// Backtracking k-coloring over vertices in `order`; colors[v] = -1 if unset.
bool color_from(const std::vector<std::uint64_t>& rows, const std::vector<Vertex>& order,
                std::size_t idx, std::size_t k, std::size_t used, std::vector<int>& colors) {
  if (idx == order.size()) return true;
  const Vertex v = order[idx];
  std::uint64_t blocked = 0;
  for (std::uint64_t nb = rows[v]; nb; nb &= nb - 1) {
    int c = colors[std::countr_zero(nb)];
    if (c >= 0) blocked |= std::uint64_t{1} << c;
  }
  // Colors beyond used+1 are symmetric to color `used`.
  const std::size_t limit = std::min(k, used + 1);
  for (std::size_t c = 0; c < limit; ++c) {
    if (blocked >> c & 1) continue;
    colors[v] = static_cast<int>(c);
    if (color_from(rows, order, idx + 1, k, std::max(used, c + 1), colors)) return true;
  }
  colors[v] = -1;
  return false;
}

std::size_t greedy_colors(const std::vector<std::uint64_t>& rows,
                          const std::vector<Vertex>& order) {
  std::vector<int> colors(rows.size(), -1);
  std::size_t used = 0;
  for (Vertex v : order) {
    std::uint64_t blocked = 0;
    for (std::uint64_t nb = rows[v]; nb; nb &= nb - 1) {
      int c = colors[std::countr_zero(nb)];
      if (c >= 0) blocked |= std::uint64_t{1} << c;
    }
    const int c = std::countr_one(blocked);
    colors[v] = c;
    used = std::max(used, static_cast<std::size_t>(c) + 1);
  }
  return used;
}

std::size_t cut_size(const std::vector<std::uint64_t>& rows, std::uint64_t side) {
  std::size_t cut = 0;
  for (std::uint64_t s = side; s; s &= s - 1)
    cut += static_cast<std::size_t>(std::popcount(rows[std::countr_zero(s)] & ~side));
  return cut;
}

// Searches for an automorphism extending the partial map `image`.
bool extend_automorphism(const Graph& g, std::vector<Vertex>& image,
                         std::vector<bool>& taken, Vertex next) {
  const std::size_t n = g.order();
  if (next == n) return true;
  if (image[next] != n) {  // pre-assigned
    return extend_automorphism(g, image, taken, next + 1);
  }
  for (Vertex target = 0; target < n; ++target) {
    if (taken[target] || g.degree(target) != g.degree(next)) continue;
    bool ok = true;
    for (Vertex x = 0; x < n && ok; ++x)
      if (image[x] != n && x != next)
        ok = g.adjacent(x, next) == g.adjacent(image[x], target);
    if (!ok) continue;
    image[next] = target;
    taken[target] = true;
    if (extend_automorphism(g, image, taken, next + 1)) return true;
    image[next] = n;
    taken[target] = false;
  }
  return false;
}

bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<Vertex>& image,
                        std::vector<bool>& taken, Vertex next) {
  const std::size_t n = g.order();
  if (next == n) return true;
  for (Vertex target = 0; target < n; ++target) {
    if (taken[target] || g.degree(next) != h.degree(target)) continue;
    bool ok = true;
    for (Vertex x = 0; x < next && ok; ++x)
      ok = g.adjacent(x, next) == h.adjacent(image[x], target);
    if (!ok) continue;
    image[next] = target;
    taken[target] = true;
    if (extend_isomorphism(g, h, image, taken, next + 1)) return true;
    taken[target] = false;
  }
  return false;
}

Vertex find_root(std::vector<Vertex>& parent, Vertex v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

bool is_clique_free(const Graph& g, std::size_t clique_size) {
  if (clique_size < 2) throw ParameterError("is_clique_free: clique size >= 2 required");
  return !has_clique(g, clique_size);
}

std::size_t clique_number(const Graph& g) {
  std::size_t k = g.order() == 0 ? 0 : 1;
  while (has_clique(g, k + 1)) ++k;
  return k;
}

std::size_t chromatic_number(const Graph& g, std::size_t limit) {
  require_capacity(g.order(), std::min<std::size_t>(limit, 64), "chromatic_number");
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (g.size() == 0) return 1;
  const auto rows = bit_rows(g);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  const std::size_t lower = clique_number(g);
  const std::size_t upper = greedy_colors(rows, order);
  for (std::size_t k = lower; k < upper; ++k) {
    std::vector<int> colors(n, -1);
    if (color_from(rows, order, 0, k, 0, colors)) return k;
  }
  return upper;
}

std::size_t maxcut(const Graph& g, Execution exec) {
  require_capacity(g.order(), kMaxcutLimit, "maxcut");
  const std::size_t n = g.order();
  if (n < 2) return 0;
  const auto rows = bit_rows(g);
  // Vertex n-1 stays on the complement side; that halves the search.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);

  if (exec == Execution::serial) {
    std::size_t best = 0;
    for (std::uint64_t side = 0; side < total; ++side)
      best = std::max(best, cut_size(rows, side));
    return best;
  }

  const std::uint64_t block = std::min<std::uint64_t>(total, 1u << 12);
  const std::int64_t blocks = static_cast<std::int64_t>(total / block);
  std::size_t best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t start = static_cast<std::uint64_t>(b) * block;
    std::uint64_t side = start ^ (start >> 1);
    std::size_t cut = cut_size(rows, side);
    std::size_t local = cut;
    for (std::uint64_t i = start + 1; i < start + block; ++i) {
      const int v = std::countr_zero(i);  // Gray code flips bit v
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t own_side = (side & bit) ? side : ~side;
      const auto same = static_cast<std::size_t>(std::popcount(rows[v] & own_side & ~bit));
      const auto other = static_cast<std::size_t>(std::popcount(rows[v])) - same;
      cut = cut + same - other;
      side ^= bit;
      local = std::max(local, cut);
    }
    best = std::max(best, local);
  }
  return best;
}

std::vector<std::vector<Vertex>> vertex_orbits(const Graph& g) {
  require_capacity(g.order(), kOrbitLimit, "vertex_orbits");
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(u) != g.degree(v) || find_root(parent, u) == find_root(parent, v)) continue;
      std::vector<Vertex> image(n, n);
      std::vector<bool> taken(n, false);
      image[u] = v;
      taken[v] = true;
      // The pre-assigned pair must itself be consistent with later choices;
      // extend_automorphism checks every assigned pair against `next`.
      if (extend_automorphism(g, image, taken, 0)) {
        parent[find_root(parent, v)] = find_root(parent, u);
      }
    }
  }
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> slot(n, n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = find_root(parent, v);
    if (slot[root] == n) {
      slot[root] = classes.size();
      classes.emplace_back();
    }
    classes[slot[root]].push_back(v);
  }
  return classes;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.sorted_degrees() != h.sorted_degrees()) return false;
  require_capacity(g.order(), kOrbitLimit, "are_isomorphic");
  std::vector<Vertex> image(g.order(), 0);
  std::vector<bool> taken(g.order(), false);
  return extend_isomorphism(g, h, image, taken, 0);
}

bool is_complete_multipartite(const Graph& g, std::size_t parts) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cls(n, n);
  std::size_t count = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (cls[u] != n) continue;
    cls[u] = count;
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) {
        if (cls[v] != n) return false;
        cls[v] = count;
      }
    ++count;
  }
  // Each class must be independent and fully joined to every other class.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if ((cls[u] == cls[v]) == g.adjacent(u, v)) return false;
  return count == parts;
}

}  // namespace aalpha
