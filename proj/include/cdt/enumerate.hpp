#ifndef CDT_ENUMERATE_HPP
#define CDT_ENUMERATE_HPP

// Isomorph-free generation of G(Delta, omega) by canonical augmentation.
//
// Graphs grow one vertex at a time. A child C = P + v is kept only when v is
// a canonical deletion vertex of C up to isomorphism: v has the least vertex
// invariant (degree first) and C - v is isomorphic to C - w, where w is the
// least-invariant vertex earliest in C's canonical order. The parent class is
// then a function of C's class, so distinct parents never share a child and
// only siblings need deduplication. The class is hereditary, so pruning a
// child the moment it breaks the degree or clique bound loses nothing.
//
// Parallel runs cut the tree at a fixed depth that depends only on n_max;
// subtrees are processed independently and merged in tree order, so results
// do not depend on the thread count.

#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "cdt/canonical.hpp"
#include "cdt/cliques.hpp"
#include "cdt/graph.hpp"

namespace cdt {

inline constexpr int kDefaultSearchCap = 11;
inline constexpr int kHardSearchCap = 16;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassSpec {
  int n_min = 1;
  int n_max = 1;
  int delta = 0;
  int omega = 1;
};

struct EnumerationOptions {
  int threads = 1;
  int cap = kDefaultSearchCap;
  /// Optional subtree cut: returning true skips every proper descendant of the
  /// given graph (the graph itself is still visited). Must be thread-safe.
  std::function<bool(const Graph&)> prune;
};

namespace detail {

inline void check_spec(const ClassSpec& spec, const EnumerationOptions& opt) {
  if (opt.cap > kHardSearchCap) {
    throw CapExceeded("search cap " + std::to_string(opt.cap) + " exceeds the hard limit " +
                      std::to_string(kHardSearchCap));
  }
  if (spec.n_max > opt.cap) {
    throw CapExceeded("n = " + std::to_string(spec.n_max) + " exceeds the search cap " +
                      std::to_string(opt.cap));
  }
  if (spec.n_min < 0 || spec.n_min > spec.n_max) throw std::invalid_argument("empty vertex-count range");
  if (spec.delta < 0) throw std::invalid_argument("negative degree bound");
}

// Canonical adjacency rows packed 16 bits per row; exact for n <= 16.
struct PackedForm {
  std::array<std::uint64_t, 4> words{};
  bool operator==(const PackedForm&) const = default;
};
struct PackedFormHash {
  std::size_t operator()(const PackedForm& f) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : f.words) h = (h ^ w) * 0xff51afd7ed558ccdULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};
inline PackedForm pack(const CanonicalLabeling& lab) {
  PackedForm f;
  for (int i = 0; i < lab.n; ++i) f.words[i / 4] |= lab.rows[i] << (16 * (i % 4));
  return f;
}

// Deletion-order invariant; the canonical deletion vertex minimizes it.
inline std::uint64_t deletion_key(const Graph& g, int v) {
  const std::uint64_t nbrs = g.row(v);
  std::uint64_t degree_sum = 0;
  std::uint64_t triangles = 0;
  for (std::uint64_t rest = nbrs; rest != 0; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    degree_sum += static_cast<std::uint64_t>(std::popcount(g.row(u)));
    triangles += static_cast<std::uint64_t>(std::popcount(g.row(u) & nbrs));
  }
  return (static_cast<std::uint64_t>(std::popcount(nbrs)) << 40) | (degree_sum << 20) | (triangles / 2);
}

struct TreeNode {
  Graph graph;
  CanonicalLabeling labeling;
};

class Augmenter {
 public:
  Augmenter(const ClassSpec& spec, const EnumerationOptions& opt) : spec_(spec), opt_(opt) {}

  /// Calls emit(child, needs_labeling ? &labeling : nullptr) for every accepted child.
  template <class Emit>
  void children(const TreeNode& parent, bool want_labeling, Emit&& emit) const {
    const Graph& p = parent.graph;
    const int n = p.n();
    if (n >= kMaxVertices || spec_.omega < 1) return;

    std::uint64_t avail = 0;
    int min_deg = kMaxVertices;
    for (int u = 0; u < n; ++u) {
      const int d = std::popcount(p.row(u));
      if (d < spec_.delta) avail |= std::uint64_t{1} << u;
      min_deg = std::min(min_deg, d);
    }
    // The new vertex must have minimum degree in the child.
    const int max_size = std::min(spec_.delta, n == 0 ? 0 : min_deg + 1);

    std::unordered_set<PackedForm, PackedFormHash> seen;
    auto consider = [&](std::uint64_t s) {
      Graph c = p.with_vertex(VertexSet(s));
      const std::uint64_t key_new = deletion_key(c, n);
      std::uint64_t ties = 0;
      for (int u = 0; u < n; ++u) {
        const std::uint64_t k = deletion_key(c, u);
        if (k < key_new) return;
        if (k == key_new) ties |= std::uint64_t{1} << u;
      }
      if (ties == 0) {
        // The new vertex is the only candidate for deletion, so isomorphic
        // siblings differ by an automorphism of the parent.
        if (parent.labeling.trivial_group() && !want_labeling) {
          emit(c, static_cast<const CanonicalLabeling*>(nullptr));
          return;
        }
        const CanonicalLabeling lab = canonical_labeling(c);
        if (!parent.labeling.trivial_group() && !seen.insert(pack(lab)).second) return;
        emit(c, &lab);
        return;
      }
      const CanonicalLabeling lab = canonical_labeling(c);
      int w = n;
      for (std::uint64_t rest = ties; rest != 0; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        if (lab.position[u] < lab.position[w]) w = u;
      }
      if (w != n && !lab.same_orbit(w, n)) {
        const CanonicalLabeling reduced = canonical_labeling(c.without_vertex(w));
        if (!std::equal(reduced.rows.begin(), reduced.rows.begin() + n, parent.labeling.rows.begin())) return;
      }
      if (!seen.insert(pack(lab)).second) return;
      emit(c, &lab);
    };

    // Subsets of available vertices, built in increasing order, that stay
    // within the size limit and contain no K_omega.
    auto rec = [&](auto&& self, std::uint64_t rest, std::uint64_t s, int size) -> void {
      consider(s);
      if (size == max_size) return;
      for (std::uint64_t r = rest; r != 0;) {
        const int u = std::countr_zero(r);
        r &= r - 1;
        if (has_clique(p, VertexSet(p.row(u) & s), spec_.omega - 1)) continue;
        self(self, r, s | (std::uint64_t{1} << u), size + 1);
      }
    };
    rec(rec, avail, 0, 0);
  }

  template <class Visit>
  void descend(const TreeNode& node, Visit& visit) const {
    if (node.graph.n() >= spec_.n_min) visit(node.graph);
    if (node.graph.n() >= spec_.n_max) return;
    if (opt_.prune && opt_.prune(node.graph)) return;
    const bool leaf_level = node.graph.n() + 1 == spec_.n_max;
    children(node, !leaf_level, [&](const Graph& c, const CanonicalLabeling* lab) {
      if (leaf_level) {
        if (c.n() >= spec_.n_min) visit(c);
        return;
      }
      descend(TreeNode{c, *lab}, visit);
    });
  }

  /// Nodes at `depth` vertices (visiting shallower ones on the way).
  template <class Visit>
  void collect(const TreeNode& node, int depth, Visit& visit, std::vector<TreeNode>& out) const {
    if (node.graph.n() == depth) {
      out.push_back(node);
      return;
    }
    if (node.graph.n() >= spec_.n_min) visit(node.graph);
    if (opt_.prune && opt_.prune(node.graph)) return;
    children(node, true, [&](const Graph& c, const CanonicalLabeling* lab) {
      collect(TreeNode{c, *lab}, depth, visit, out);
    });
  }

 private:
  ClassSpec spec_;
  EnumerationOptions opt_;
};

inline int split_depth(int n_max) { return std::clamp(n_max - 4, 0, 7); }

}  // namespace detail

/// Visits one graph per isomorphism class of graphs with n_min <= n <= n_max
/// vertices, maximum degree <= delta and clique number <= omega, and merges the
/// per-subtree accumulators in a fixed order.
///
/// Acc needs `void operator()(const Graph&)` and `void merge(Acc&&)`.
template <class Acc, class MakeAcc>
Acc reduce_class(const ClassSpec& spec, const EnumerationOptions& opt, MakeAcc&& make) {
  detail::check_spec(spec, opt);
  const detail::Augmenter tree(spec, opt);
  const detail::TreeNode root{Graph(0), canonical_labeling(Graph(0))};

  Acc total = make();
  const int depth = detail::split_depth(spec.n_max);
  std::vector<detail::TreeNode> tasks;
  if (depth == 0 || depth >= spec.n_max) {
    tree.descend(root, total);
    return total;
  }
  tree.collect(root, depth, total, tasks);

  std::vector<Acc> partial;
  partial.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) partial.push_back(make());

  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(tasks.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) tree.descend(tasks[i], partial[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < tasks.size(); i = next++) tree.descend(tasks[i], partial[i]);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
          next = tasks.size();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (auto& p : partial) total.merge(std::move(p));
  return total;
}

/// Sequential visit of exactly the n-vertex graphs of G(Delta, omega), one per
/// isomorphism class. Returns the number of graphs visited.
template <class Visitor>
Count enumerate_class(int n, int delta, int omega, Visitor&& visitor, int cap = kDefaultSearchCap) {
  ClassSpec spec{n, n, delta, omega};
  EnumerationOptions opt;
  opt.cap = cap;
  detail::check_spec(spec, opt);
  Count visited = 0;
  auto visit = [&](const Graph& g) {
    ++visited;
    visitor(g);
  };
  const detail::Augmenter tree(spec, opt);
  tree.descend(detail::TreeNode{Graph(0), canonical_labeling(Graph(0))}, visit);
  return visited;
}

/// Graphs in the class per vertex count n_min..n_max.
inline std::vector<Count> count_class(const ClassSpec& spec, const EnumerationOptions& opt = {}) {
  struct Counter {
    std::vector<Count> per_n;
    void operator()(const Graph& g) { ++per_n[static_cast<std::size_t>(g.n())]; }
    void merge(Counter&& o) {
      for (std::size_t i = 0; i < per_n.size(); ++i) per_n[i] += o.per_n[i];
    }
  };
  const auto size = static_cast<std::size_t>(spec.n_max) + 1;
  return reduce_class<Counter>(spec, opt, [&] { return Counter{std::vector<Count>(size, 0)}; }).per_n;
}

}  // namespace cdt

#endif  // CDT_ENUMERATE_HPP
