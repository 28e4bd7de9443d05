#ifndef CDT_GRAPH_HPP
#define CDT_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdt {

/// Largest vertex count a Graph can hold (one 64-bit word per adjacency row).
inline constexpr int kMaxVertices = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of vertex indices 0..63 packed into one word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Lowest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 64 vertices, stored as adjacency bitsets.
///
/// Values are immutable once built; every combinator returns a fresh graph.
/// Rows above n() are always zero, so two graphs compare equal exactly when
/// they have the same labeled edge set.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(checked_order(n)) {}

  Graph(int n, const std::vector<Edge>& edges) : n_(checked_order(n)) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has a vertex out of range for n=" + std::to_string(n));
      }
      if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
      link(u, v);
    }
  }

  /// Builds from raw rows; rows must describe a symmetric irreflexive relation
  /// on {0..n-1}.
  static Graph from_rows(int n, const std::array<std::uint64_t, kMaxVertices>& rows) {
    Graph g(n);
    const std::uint64_t mask = VertexSet::first(n).bits();
    for (int v = 0; v < n; ++v) {
      if ((rows[v] & ~mask) != 0 || ((rows[v] >> v) & 1U)) {
        throw GraphError("row " + std::to_string(v) + " is not a valid neighborhood");
      }
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v) {
      for (int u : VertexSet(rows[v])) {
        if (!((rows[u] >> v) & 1U)) throw GraphError("adjacency rows are not symmetric");
      }
    }
    return g;
  }

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[checked_vertex(v)]); }
  std::uint64_t row(int v) const { return adj_[v]; }
  const std::array<std::uint64_t, kMaxVertices>& rows() const { return adj_; }
  int degree(int v) const { return std::popcount(adj_[checked_vertex(v)]); }
  bool has_edge(int u, int v) const {
    checked_vertex(u);
    checked_vertex(v);
    return (adj_[u] >> v) & 1U;
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v) {
      const std::uint64_t above = adj_[v] & ~((std::uint64_t{2} << v) - 1);
      for (int u : VertexSet(above)) out.emplace_back(v, u);
    }
    return out;
  }

  /// Copy with one extra vertex (index n()) adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const {
    if (n_ >= kMaxVertices) throw GraphError("vertex capacity exceeded");
    if (!nbrs.subset_of(vertices())) throw GraphError("neighborhood outside the graph");
    Graph g = *this;
    const int v = g.n_++;
    g.adj_[v] = nbrs.bits();
    for (int u : nbrs) g.adj_[u] |= std::uint64_t{1} << v;
    return g;
  }

  /// Copy without vertex v; higher vertices shift down by one.
  Graph without_vertex(int v) const {
    checked_vertex(v);
    Graph g(n_ - 1);
    const std::uint64_t low = (std::uint64_t{1} << v) - 1;
    int j = 0;
    for (int u = 0; u < n_; ++u) {
      if (u == v) continue;
      const std::uint64_t r = adj_[u];
      g.adj_[j++] = (r & low) | ((r >> 1) & ~low);
    }
    return g;
  }

  bool operator==(const Graph&) const = default;

  /// Symmetry, irreflexivity and clear high bits.
  bool is_well_formed() const {
    const std::uint64_t mask = vertices().bits();
    for (int v = 0; v < kMaxVertices; ++v) {
      if (v >= n_) {
        if (adj_[v] != 0) return false;
        continue;
      }
      if ((adj_[v] & ~mask) != 0 || ((adj_[v] >> v) & 1U)) return false;
      for (int u : VertexSet(adj_[v])) {
        if (!((adj_[u] >> v) & 1U)) return false;
      }
    }
    return true;
  }

 private:
  static int checked_order(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw GraphError("vertex count " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
    }
    return n;
  }
  int checked_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }
    return v;
  }
  void link(int u, int v) {
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline Graph complement(const Graph& g) {
  std::array<std::uint64_t, kMaxVertices> rows{};
  const std::uint64_t mask = g.vertices().bits();
  for (int v = 0; v < g.n(); ++v) rows[v] = ~g.row(v) & mask & ~(std::uint64_t{1} << v);
  return Graph::from_rows(g.n(), rows);
}

/// Subgraph induced by `s`, relabeled 0..|s|-1 in increasing vertex order.
inline Graph induced(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw GraphError("vertex set is not a subset of V(G)");
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for (int v : s) index[v] = k++;
  std::array<std::uint64_t, kMaxVertices> rows{};
  for (int v : s) {
    for (int u : VertexSet(g.row(v)) & s) rows[index[v]] |= std::uint64_t{1} << index[u];
  }
  return Graph::from_rows(k, rows);
}

namespace detail {
inline Graph place_side_by_side(const Graph& g, const Graph& h, bool cross) {
  const int total = g.n() + h.n();
  if (total > kMaxVertices) {
    throw GraphError("combined vertex count " + std::to_string(total) + " exceeds capacity");
  }
  std::array<std::uint64_t, kMaxVertices> rows{};
  const std::uint64_t g_mask = g.vertices().bits();
  const std::uint64_t h_mask = h.n() == 0 ? 0 : (h.vertices().bits() << g.n());
  for (int v = 0; v < g.n(); ++v) rows[v] = g.row(v) | (cross ? h_mask : 0);
  for (int v = 0; v < h.n(); ++v) rows[g.n() + v] = (h.row(v) << g.n()) | (cross ? g_mask : 0);
  return Graph::from_rows(total, rows);
}
}  // namespace detail

/// Disjoint union; h's vertices follow g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  return detail::place_side_by_side(g, h, false);
}

/// Join: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& g, const Graph& h) { return detail::place_side_by_side(g, h, true); }

inline VertexSet neighborhood(const Graph& g, int v, bool closed) {
  VertexSet s = g.neighbors(v);
  if (closed) s.insert(v);
  return s;
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) best = std::max(best, std::popcount(g.row(v)));
  return best;
}

inline int min_degree(const Graph& g) {
  if (g.n() == 0) return 0;
  int best = kMaxVertices;
  for (int v = 0; v < g.n(); ++v) best = std::min(best, std::popcount(g.row(v)));
  return best;
}

// Small named graphs used throughout tests and constructions.

inline Graph complete_graph(int n) { return complement(Graph(n)); }
inline Graph empty_graph(int n) { return Graph(n); }

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

/// Complete multipartite graph with the given part sizes, parts laid out in order.
inline Graph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  if (n > kMaxVertices) throw GraphError("vertex capacity exceeded");
  std::vector<int> part_of;
  part_of.reserve(n);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) part_of.insert(part_of.end(), parts[i], i);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Applies a relabeling: vertex v of g becomes perm[v].
inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), edges);
}

}  // namespace cdt

#endif  // CDT_GRAPH_HPP
