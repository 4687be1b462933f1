#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace subtree_iso {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A tree on the vertices 0..n-1, stored as adjacency lists, with an
/// optional distinguished root.
///
/// Every constructor path validates the tree invariants: symmetric
/// adjacency, exactly n-1 edges, connected, root in range. Instances are
/// immutable values and can be shared freely between threads.
class LabeledTree {
 public:
  /// The single-vertex tree, rooted at its only vertex.
  LabeledTree() : adjacency_(1), root_(0) {}

  /// Builds a tree of the given order from an edge list.
  /// Throws InvalidArgument on out-of-range vertices, self loops,
  /// duplicate edges, cycles or disconnected input.
  static LabeledTree from_edges(std::size_t order, std::span<const Edge> edges,
                                std::optional<Vertex> root = std::nullopt) {
    if (order == 0) throw InvalidArgument("tree order must be positive");
    LabeledTree t;
    t.adjacency_.assign(order, {});
    t.root_.reset();
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= order ||
          static_cast<std::size_t>(v) >= order)
        throw InvalidArgument("edge " + std::to_string(u) + " " + std::to_string(v) +
                              " references a vertex outside 0.." + std::to_string(order - 1));
      if (u == v) throw InvalidArgument("self loop at vertex " + std::to_string(u));
      auto& nu = t.adjacency_[u];
      if (std::find(nu.begin(), nu.end(), v) != nu.end())
        throw InvalidArgument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      nu.push_back(v);
      t.adjacency_[v].push_back(u);
    }
    if (edges.size() != order - 1)
      throw InvalidArgument("a tree of order " + std::to_string(order) + " needs " +
                            std::to_string(order - 1) + " edges, got " +
                            std::to_string(edges.size()));
    if (!t.connected()) throw InvalidArgument("graph is disconnected (and therefore cyclic)");
    if (root) t.set_root(*root);
    return t;
  }

  /// Decodes a level sequence (depths in preorder, root at depth 1).
  /// Vertex i of the result is the i-th entry; vertex 0 is the root.
  static LabeledTree from_level_sequence(std::span<const int> levels) {
    if (levels.empty()) throw InvalidArgument("empty level sequence");
    if (levels[0] != 1) throw InvalidArgument("level sequence must start at level 1");
    std::vector<Edge> edges;
    edges.reserve(levels.size() - 1);
    std::vector<Vertex> last_at_level{0};  // last_at_level[d-1] = latest vertex at depth d
    for (std::size_t i = 1; i < levels.size(); ++i) {
      const int level = levels[i];
      const int prev = levels[i - 1];
      if (level < 2 || level > prev + 1)
        throw InvalidArgument("level " + std::to_string(level) + " at position " +
                              std::to_string(i) + " is not in 2.." + std::to_string(prev + 1));
      edges.emplace_back(last_at_level[level - 2], static_cast<Vertex>(i));
      last_at_level.resize(level - 1);
      last_at_level.push_back(static_cast<Vertex>(i));
    }
    return from_edges(levels.size(), edges, Vertex{0});
  }

  std::size_t order() const noexcept { return adjacency_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<Vertex> root() const noexcept { return root_; }
  bool rooted() const noexcept { return root_.has_value(); }

  Vertex require_root() const {
    if (!root_) throw InvalidArgument("operation requires a rooted tree");
    return *root_;
  }

  LabeledTree with_root(Vertex r) const {
    LabeledTree t = *this;
    t.set_root(r);
    return t;
  }

  LabeledTree unrooted() const {
    LabeledTree t = *this;
    t.root_.reset();
    return t;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(order() - 1);
    for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Vertex v of this tree becomes vertex perm[v] of the result.
  LabeledTree relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != order()) throw InvalidArgument("permutation size does not match order");
    std::vector<Edge> es;
    es.reserve(order() - 1);
    for (auto [u, v] : edges()) es.emplace_back(perm[u], perm[v]);
    std::optional<Vertex> r;
    if (root_) r = perm[*root_];
    return from_edges(order(), es, r);
  }

  /// Parent of every vertex when the tree hangs from `from` (-1 for `from`),
  /// together with a breadth-first order starting at `from`.
  std::pair<std::vector<Vertex>, std::vector<Vertex>> bfs(Vertex from) const {
    check_vertex(from);
    std::vector<Vertex> parent(order(), -1);
    std::vector<Vertex> queue{from};
    queue.reserve(order());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : adjacency_[u])
        if (w != parent[u]) {
          parent[w] = u;
          queue.push_back(w);
        }
    }
    return {std::move(parent), std::move(queue)};
  }

  /// Children of v in the rooted orientation.
  std::vector<Vertex> children(Vertex v) const {
    const auto parent = bfs(require_root()).first;
    std::vector<Vertex> out;
    for (Vertex w : adjacency_.at(v))
      if (w != parent[v]) out.push_back(w);
    return out;
  }

  /// The components left after deleting `v`, each rooted at the vertex that
  /// was adjacent to `v`. Vertices are renumbered in breadth-first order.
  std::vector<LabeledTree> branches_at(Vertex v) const {
    check_vertex(v);
    std::vector<LabeledTree> out;
    for (Vertex start : adjacency_[v]) out.push_back(extract_component(start, v));
    return out;
  }

  /// The root branches of a rooted tree.
  std::vector<LabeledTree> root_branches() const { return branches_at(require_root()); }

  bool operator==(const LabeledTree& other) const {
    return root_ == other.root_ && order() == other.order() && edges() == other.edges();
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= order())
      throw InvalidArgument("vertex " + std::to_string(v) + " is not in 0.." +
                            std::to_string(order() - 1));
  }

  void set_root(Vertex r) {
    check_vertex(r);
    root_ = r;
  }

  bool connected() const {
    std::vector<char> seen(order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == order();
  }

  LabeledTree extract_component(Vertex start, Vertex blocked) const {
    std::vector<Vertex> index(order(), -1);
    std::vector<Vertex> queue{start};
    std::vector<Edge> es;
    index[start] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : adjacency_[u]) {
        if (w == blocked || index[w] != -1) continue;
        index[w] = static_cast<Vertex>(queue.size());
        queue.push_back(w);
        es.emplace_back(index[u], index[w]);
      }
    }
    return from_edges(queue.size(), es, Vertex{0});
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::optional<Vertex> root_;
};

/// A new root adjacent to the root of every branch. The new root is vertex 0;
/// branch vertices follow in order. An empty list yields the single vertex.
inline LabeledTree join_at_root(std::span<const LabeledTree> branches) {
  std::size_t order = 1;
  std::vector<Edge> edges;
  for (const auto& b : branches) {
    const Vertex offset = static_cast<Vertex>(order);
    edges.emplace_back(0, offset + b.require_root());
    for (auto [u, v] : b.edges()) edges.emplace_back(offset + u, offset + v);
    order += b.order();
  }
  return LabeledTree::from_edges(order, edges, Vertex{0});
}

inline LabeledTree join_at_root(std::initializer_list<LabeledTree> branches) {
  return join_at_root(std::span<const LabeledTree>(branches.begin(), branches.size()));
}

/// Identifies the roots of two rooted trees; the shared vertex is the root
/// (vertex 0) of the result. Order is |a| + |b| - 1.
inline LabeledTree merge_at_root(const LabeledTree& a, const LabeledTree& b) {
  std::vector<LabeledTree> branches = a.root_branches();
  for (auto& br : b.root_branches()) branches.push_back(std::move(br));
  return join_at_root(branches);
}

inline LabeledTree path_tree(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i < n; ++i) es.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return LabeledTree::from_edges(n, es);
}

/// K_{1,n-1} with the hub at vertex 0.
inline LabeledTree star_tree(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i < n; ++i) es.emplace_back(0, static_cast<Vertex>(i));
  return LabeledTree::from_edges(n, es);
}

}  // namespace subtree_iso
