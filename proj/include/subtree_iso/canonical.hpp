#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tree.hpp"

namespace subtree_iso {

/// Isomorphism-class key of a rooted or free tree.
///
/// Rooted codes are AHU parenthesis strings: a leaf is "()", an internal
/// vertex is '(' + child codes sorted bytewise + ')'. Free codes are
/// "U:" + the rooted code at the unique center, or "B:" + the two half codes
/// (split at the central edge) sorted and concatenated.
struct CanonicalCode {
  std::string bytes;

  bool is_rooted() const noexcept { return !bytes.empty() && bytes.front() == '('; }
  bool is_free() const noexcept { return bytes.size() >= 2 && bytes[1] == ':'; }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

/// AHU code of the component of {v : in(v)} containing `root`, never
/// stepping onto `blocked`.
template <class InSet>
std::string rooted_code_within(const LabeledTree& t, Vertex root, InSet&& in,
                               Vertex blocked = -1) {
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order{root};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    for (Vertex w : t.neighbors(u))
      if (w != parent[u] && w != blocked && in(w)) {
        parent[w] = u;
        order.push_back(w);
      }
  }
  std::vector<std::vector<std::string>> pending(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = pending[v];
    std::sort(kids.begin(), kids.end());
    code.clear();
    code.push_back('(');
    for (const auto& k : kids) code += k;
    code.push_back(')');
    kids.clear();
    if (v == root) break;
    pending[parent[v]].push_back(code);
  }
  return code;
}

/// Centers of the subtree induced by {v : in(v)} (assumed connected).
template <class InSet>
std::vector<Vertex> centers_within(const LabeledTree& t, InSet&& in) {
  const std::size_t n = t.order();
  std::vector<int> degree(n, -1);
  std::vector<Vertex> layer;
  std::size_t remaining = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (!in(v)) continue;
    ++remaining;
    int d = 0;
    for (Vertex w : t.neighbors(v))
      if (in(w)) ++d;
    degree[v] = d;
    if (d <= 1) layer.push_back(v);
  }
  while (remaining > 2) {
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      degree[v] = -1;
      --remaining;
      for (Vertex w : t.neighbors(v))
        if (degree[w] > 0 && --degree[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    if (degree[v] >= 0) out.push_back(v);
  return out;
}

template <class InSet>
std::string free_code_within(const LabeledTree& t, InSet&& in) {
  const auto c = centers_within(t, in);
  if (c.size() == 1) return "U:" + rooted_code_within(t, c[0], in);
  std::string a = rooted_code_within(t, c[0], in, c[1]);
  std::string b = rooted_code_within(t, c[1], in, c[0]);
  if (b < a) std::swap(a, b);
  return "B:" + a + b;
}

inline bool everything(Vertex) { return true; }

}  // namespace detail

inline CanonicalCode rooted_code(const LabeledTree& tree, Vertex root) {
  if (root < 0 || static_cast<std::size_t>(root) >= tree.order())
    throw InvalidArgument("root " + std::to_string(root) + " is not a vertex");
  return {detail::rooted_code_within(tree, root, detail::everything)};
}

inline CanonicalCode rooted_code(const LabeledTree& tree) {
  return rooted_code(tree, tree.require_root());
}

inline CanonicalCode free_code(const LabeledTree& tree) {
  return {detail::free_code_within(tree, detail::everything)};
}

/// Vertices of minimum eccentricity; one vertex or two adjacent ones.
inline std::vector<Vertex> centers(const LabeledTree& tree) {
  return detail::centers_within(tree, detail::everything);
}

/// Vertices minimizing the total distance to all others. Equivalently, the
/// vertices whose largest branch is smallest (at most n/2 vertices).
inline std::vector<Vertex> centroids(const LabeledTree& tree) {
  const std::size_t n = tree.order();
  auto [parent, order] = tree.bfs(0);
  std::vector<std::size_t> size(n, 1);
  std::vector<std::size_t> largest(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    largest[v] = std::max(largest[v], n - size[v]);
    if (parent[v] >= 0) {
      size[parent[v]] += size[v];
      largest[parent[v]] = std::max(largest[parent[v]], size[v]);
    }
  }
  const std::size_t best = *std::min_element(largest.begin(), largest.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    if (largest[v] == best) out.push_back(v);
  return out;
}

/// Rebuilds a rooted tree from its AHU code. Vertices are numbered in
/// preorder of the code, so the root is vertex 0.
inline LabeledTree tree_from_rooted_code(const CanonicalCode& code) {
  const std::string& s = code.bytes;
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  bool closed = false;
  for (char ch : s) {
    if (closed) throw ParseError("rooted code has trailing bytes: " + s);
    if (ch == '(') {
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else if (ch == ')') {
      if (stack.empty()) throw ParseError("unbalanced rooted code: " + s);
      stack.pop_back();
      closed = stack.empty();
    } else {
      throw ParseError("unexpected byte in rooted code: " + s);
    }
  }
  if (!closed) throw ParseError("unbalanced rooted code: " + s);
  return LabeledTree::from_edges(static_cast<std::size_t>(next), edges, Vertex{0});
}

}  // namespace subtree_iso

template <>
struct std::hash<subtree_iso::CanonicalCode> {
  std::size_t operator()(const subtree_iso::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
