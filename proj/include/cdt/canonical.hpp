#ifndef CDT_CANONICAL_HPP
#define CDT_CANONICAL_HPP

// Canonical labeling by equitable refinement plus a backtracking search over
// the individualization tree, pruned with the automorphisms found on the way.
//
// Leaves are compared by their relabeled adjacency rows; the greatest leaf is
// the canonical one. Two kinds of pruning are applied, both exact:
//  * at any node, children in the same orbit of the pointwise stabilizer of
//    the node's individualized prefix (as far as known) are explored once;
//  * when a leaf reproduces the first or the best leaf, the automorphism is
//    recorded and the search unwinds to the node where the two paths split.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "cdt/graph.hpp"
#include "cdt/graph6.hpp"

namespace cdt {

using AdjacencyRows = std::array<std::uint64_t, kMaxVertices>;

struct CanonicalLabeling {
  int n = 0;
  /// order[i] is the vertex placed at canonical position i.
  std::array<std::uint8_t, kMaxVertices> order{};
  /// position[v] is the canonical position of vertex v.
  std::array<std::uint8_t, kMaxVertices> position{};
  /// Adjacency rows of the canonically relabeled graph.
  AdjacencyRows rows{};
  /// Smallest vertex of each vertex's orbit under the automorphisms found.
  std::array<std::uint8_t, kMaxVertices> orbit{};
  /// Number of automorphism generators found; zero iff Aut(G) is trivial.
  int generators = 0;

  Graph graph() const { return Graph::from_rows(n, rows); }
  bool same_orbit(int u, int v) const { return orbit[u] == orbit[v]; }
  bool trivial_group() const { return generators == 0; }
};

namespace detail {

struct OrderedPartition {
  int count = 0;
  std::array<std::uint64_t, kMaxVertices> cells{};
};

class SplitterQueue {
 public:
  void push(std::uint64_t cell) { items_[tail_++] = cell; }
  bool empty() const { return head_ == tail_; }
  std::uint64_t pop() { return items_[head_++]; }

 private:
  // Every split into k fragments adds k <= 2(k-1) entries and the cell count
  // grows by k-1 <= 63 overall, so 3 * 64 entries always suffice.
  std::array<std::uint64_t, 3 * kMaxVertices + 4> items_{};
  int head_ = 0;
  int tail_ = 0;
};

/// Refines `p` to the coarsest equitable partition finer than it, processing
/// the splitters in queue order. Fragments are ordered by neighbor count, which
/// keeps the procedure invariant under relabeling.
inline void refine(const AdjacencyRows& adj, OrderedPartition& p, SplitterQueue& queue) {
  std::array<std::uint8_t, kMaxVertices> verts{};
  std::array<std::uint8_t, kMaxVertices> counts{};
  std::array<std::uint64_t, kMaxVertices + 1> bucket{};
  while (!queue.empty() && p.count < kMaxVertices) {
    const std::uint64_t splitter = queue.pop();
    for (int ci = 0; ci < p.count; ++ci) {
      const std::uint64_t cell = p.cells[ci];
      if ((cell & (cell - 1)) == 0) continue;
      int size = 0;
      bool uniform = true;
      int lo = kMaxVertices;
      int hi = 0;
      for (std::uint64_t rest = cell; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int c = std::popcount(adj[v] & splitter);
        verts[size] = static_cast<std::uint8_t>(v);
        counts[size] = static_cast<std::uint8_t>(c);
        if (size > 0 && c != counts[0]) uniform = false;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
        ++size;
      }
      if (uniform) continue;
      for (int c = lo; c <= hi; ++c) bucket[c] = 0;
      for (int i = 0; i < size; ++i) bucket[counts[i]] |= std::uint64_t{1} << verts[i];
      int fragments = 0;
      for (int c = lo; c <= hi; ++c) fragments += bucket[c] != 0;
      std::copy_backward(p.cells.begin() + ci + 1, p.cells.begin() + p.count,
                         p.cells.begin() + p.count + fragments - 1);
      int at = ci;
      for (int c = lo; c <= hi; ++c) {
        if (bucket[c] == 0) continue;
        p.cells[at++] = bucket[c];
        queue.push(bucket[c]);
      }
      p.count += fragments - 1;
      ci += fragments - 1;
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.n()), adj_(g.rows()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    out.n = n_;
    for (int v = 0; v < n_; ++v) out.orbit[v] = static_cast<std::uint8_t>(v);
    if (n_ == 0) return out;

    OrderedPartition root;
    root.count = 1;
    root.cells[0] = VertexSet::first(n_).bits();
    SplitterQueue queue;
    queue.push(root.cells[0]);
    refine(adj_, root, queue);
    search(root, 0);

    out.order = best_order_;
    for (int i = 0; i < n_; ++i) out.position[best_order_[i]] = static_cast<std::uint8_t>(i);
    out.rows = best_rows_;
    out.generators = generator_count_;

    std::array<std::uint8_t, kMaxVertices> parent{};
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(v);
    for (int k = 0; k < stored_; ++k) unite_by(generators_[k], parent);
    for (int v = 0; v < n_; ++v) out.orbit[v] = static_cast<std::uint8_t>(find(parent, v));
    return out;
  }

 private:
  static constexpr int kMaxStoredGenerators = kMaxVertices;
  using Perm = std::array<std::uint8_t, kMaxVertices>;

  static int find(std::array<std::uint8_t, kMaxVertices>& parent, int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite_by(const Perm& perm, std::array<std::uint8_t, kMaxVertices>& parent) const {
    for (int v = 0; v < n_; ++v) {
      int a = find(parent, v);
      int b = find(parent, perm[v]);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent[b] = static_cast<std::uint8_t>(a);
    }
  }

  // Returns the level the search should unwind to; a value >= the caller's
  // level means "carry on".
  int search(const OrderedPartition& p, int level) {
    if (p.count == n_) return leaf(p, level);

    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const std::uint64_t cell = p.cells[target];

    std::uint64_t fixed = 0;
    for (int i = 0; i < level; ++i) fixed |= std::uint64_t{1} << path_[i];

    std::array<std::uint8_t, kMaxVertices> parent{};
    int orbits_from = -1;
    std::uint64_t explored = 0;

    for (std::uint64_t rest = cell; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (explored != 0 && stored_ > 0) {
        if (orbits_from != stored_) {
          for (int u = 0; u < n_; ++u) parent[u] = static_cast<std::uint8_t>(u);
          for (int k = 0; k < stored_; ++k) {
            if (fixes(generators_[k], fixed)) unite_by(generators_[k], parent);
          }
          orbits_from = stored_;
        }
        const int root = find(parent, v);
        bool redundant = false;
        for (std::uint64_t e = explored; e != 0; e &= e - 1) {
          if (find(parent, std::countr_zero(e)) == root) {
            redundant = true;
            break;
          }
        }
        if (redundant) continue;
      }
      explored |= std::uint64_t{1} << v;

      OrderedPartition child = p;
      std::copy_backward(child.cells.begin() + target + 1, child.cells.begin() + child.count,
                         child.cells.begin() + child.count + 1);
      child.cells[target] = std::uint64_t{1} << v;
      child.cells[target + 1] = cell & ~(std::uint64_t{1} << v);
      ++child.count;
      SplitterQueue queue;
      queue.push(std::uint64_t{1} << v);
      refine(adj_, child, queue);

      path_[level] = static_cast<std::uint8_t>(v);
      const int back = search(child, level + 1);
      if (back < level) return back;
    }
    return level;
  }

  bool fixes(const Perm& perm, std::uint64_t fixed) const {
    for (std::uint64_t rest = fixed; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (perm[v] != v) return false;
    }
    return true;
  }

  int leaf(const OrderedPartition& p, int level) {
    Perm order{};
    Perm pos{};
    for (int i = 0; i < n_; ++i) {
      order[i] = static_cast<std::uint8_t>(std::countr_zero(p.cells[i]));
      pos[order[i]] = static_cast<std::uint8_t>(i);
    }
    AdjacencyRows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (std::uint64_t rest = adj_[order[i]]; rest != 0; rest &= rest - 1) {
        r |= std::uint64_t{1} << pos[std::countr_zero(rest)];
      }
      rows[i] = r;
    }

    if (!have_first_) {
      have_first_ = true;
      first_order_ = best_order_ = order;
      first_rows_ = best_rows_ = rows;
      first_path_ = best_path_ = path_;
      first_depth_ = best_depth_ = level;
      return level;
    }

    const int cmp_first = compare(rows, first_rows_);
    if (cmp_first == 0) {
      record(first_order_, order);
      return divergence(first_path_, first_depth_, level);
    }
    const int cmp_best = compare(rows, best_rows_);
    if (cmp_best == 0) {
      record(best_order_, order);
      return divergence(best_path_, best_depth_, level);
    }
    if (cmp_best > 0) {
      best_order_ = order;
      best_rows_ = rows;
      best_path_ = path_;
      best_depth_ = level;
    }
    return level;
  }

  int compare(const AdjacencyRows& a, const AdjacencyRows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  int divergence(const Perm& other, int other_depth, int level) const {
    const int common = std::min(other_depth, level);
    for (int i = 0; i < common; ++i) {
      if (other[i] != path_[i]) return i;
    }
    return common;
  }

  // Both leaves produce the same relabeled graph, so mapping the vertex at
  // position i of one onto the vertex at position i of the other is an
  // automorphism.
  void record(const Perm& from, const Perm& to) {
    Perm gamma{};
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (identity) return;
    ++generator_count_;
    if (stored_ < kMaxStoredGenerators) generators_[stored_++] = gamma;
  }

  int n_;
  const AdjacencyRows& adj_;

  Perm path_{};
  bool have_first_ = false;
  Perm first_order_{};
  Perm first_path_{};
  int first_depth_ = 0;
  AdjacencyRows first_rows_{};
  Perm best_order_{};
  Perm best_path_{};
  int best_depth_ = 0;
  AdjacencyRows best_rows_{};

  std::array<Perm, kMaxStoredGenerators> generators_{};
  int stored_ = 0;
  int generator_count_ = 0;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  return detail::CanonicalSearch(g).run();
}

/// graph6 text of the canonically relabeled graph; equal strings exactly for
/// isomorphic graphs.
inline std::string canonical_form(const Graph& g) {
  return graph6_encode(canonical_labeling(g).graph());
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
  const CanonicalLabeling a = canonical_labeling(g);
  const CanonicalLabeling b = canonical_labeling(h);
  return std::equal(a.rows.begin(), a.rows.begin() + a.n, b.rows.begin());
}

}  // namespace cdt

#endif  // CDT_CANONICAL_HPP
