#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "tree.hpp"

namespace subtree_iso {

/// Vertex subsets are bitmasks, so subset enumeration is limited to 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxEnumerationOrder = 64;
inline constexpr std::size_t kMaxTotalCountOrder = 60;
inline constexpr std::size_t kMaxBruteforceOrder = 25;
inline constexpr std::size_t kDefaultSetCap = 10'000'000;

inline bool contains(VertexMask mask, Vertex v) { return (mask >> v) & 1u; }

namespace detail {

template <class Visit>
void grow_subtree(const LabeledTree& t, Vertex anchor, VertexMask mask, std::vector<Vertex>& frontier,
                  Visit& visit) {
  if (frontier.empty()) {
    visit(mask);
    return;
  }
  const Vertex u = frontier.back();
  frontier.pop_back();
  grow_subtree(t, anchor, mask, frontier, visit);
  const std::size_t mark = frontier.size();
  const VertexMask with_u = mask | (VertexMask{1} << u);
  for (Vertex w : t.neighbors(u))
    if (w > anchor && !contains(with_u, w)) frontier.push_back(w);
  grow_subtree(t, anchor, with_u, frontier, visit);
  frontier.resize(mark);
  frontier.push_back(u);
}

}  // namespace detail

/// Calls visit(mask) once for every nonempty vertex subset inducing a
/// connected subgraph. Each subtree is generated from its smallest vertex,
/// growing only into larger vertices, so no subset is produced twice.
template <class Visit>
void for_each_subtree(const LabeledTree& tree, Visit&& visit) {
  if (tree.order() > kMaxEnumerationOrder)
    throw RangeError("subtree enumeration supports at most 64 vertices");
  std::vector<Vertex> frontier;
  for (Vertex a = 0; a < static_cast<Vertex>(tree.order()); ++a) {
    frontier.clear();
    for (Vertex w : tree.neighbors(a))
      if (w > a) frontier.push_back(w);
    detail::grow_subtree(tree, a, VertexMask{1} << a, frontier, visit);
  }
}

inline std::vector<VertexMask> enumerate_subtrees(const LabeledTree& tree) {
  std::vector<VertexMask> out;
  for_each_subtree(tree, [&](VertexMask m) { out.push_back(m); });
  return out;
}

inline std::uint64_t count_subtrees_by_enumeration(const LabeledTree& tree) {
  std::uint64_t count = 0;
  for_each_subtree(tree, [&](VertexMask) { ++count; });
  return count;
}

/// Number of subtrees, via the product rule: the subtrees whose top vertex
/// is v number prod over children c of (1 + that count at c).
inline std::uint64_t count_subtrees_total(const LabeledTree& tree) {
  if (tree.order() > kMaxTotalCountOrder)
    throw RangeError("total subtree counts are limited to order 60");
  auto [parent, order] = tree.bfs(0);
  std::vector<std::uint64_t> topped(tree.order(), 1);
  std::uint64_t total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (__builtin_add_overflow(total, topped[v], &total))
      throw ResourceLimit("subtree count exceeds 64 bits");
    if (parent[v] >= 0 &&
        __builtin_mul_overflow(topped[parent[v]], topped[v] + 1, &topped[parent[v]]))
      throw ResourceLimit("subtree count exceeds 64 bits");
  }
  return total;
}

/// Subtrees that do not contain v: the sum of the totals of the branches at v.
inline std::uint64_t count_subtrees_avoiding(const LabeledTree& tree, Vertex v) {
  std::uint64_t total = 0;
  for (const auto& branch : tree.branches_at(v)) total += count_subtrees_total(branch);
  return total;
}

/// A deduplicated set of isomorphism classes of subtrees of one tree.
struct SubtreeClassSet {
  enum class Mode { rooted, free };

  Mode mode = Mode::free;
  std::vector<CanonicalCode> codes;  // sorted, unique

  std::size_t size() const noexcept { return codes.size(); }
  bool contains(const CanonicalCode& c) const {
    return std::binary_search(codes.begin(), codes.end(), c);
  }
};

namespace detail {

inline SubtreeClassSet make_class_set(SubtreeClassSet::Mode mode, std::vector<std::string> raw) {
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  SubtreeClassSet s;
  s.mode = mode;
  s.codes.reserve(raw.size());
  for (auto& r : raw) s.codes.push_back({std::move(r)});
  return s;
}

}  // namespace detail

/// Free isomorphism classes of all subtrees, by enumeration.
inline SubtreeClassSet free_subtree_classes(const LabeledTree& tree) {
  std::unordered_set<std::string> seen;
  for_each_subtree(tree, [&](VertexMask m) {
    seen.insert(detail::free_code_within(tree, [m](Vertex v) { return contains(m, v); }));
  });
  return detail::make_class_set(SubtreeClassSet::Mode::free,
                                std::vector<std::string>(seen.begin(), seen.end()));
}

/// Number of nonisomorphic subtrees.
inline std::uint64_t ns(const LabeledTree& tree) { return free_subtree_classes(tree).size(); }

namespace detail {

using CodeRef = const std::string*;
using ChildChoice = std::vector<CodeRef>;  // sorted by pointee

struct ChoiceLess {
  bool operator()(const ChildChoice& a, const ChildChoice& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](CodeRef x, CodeRef y) { return *x < *y; });
  }
};

using CodeSet = std::vector<std::string>;

// Every multiset of at most `k` elements drawn from the sorted list `pool`.
inline void multisets_up_to(const CodeSet& pool, std::size_t k, std::size_t from, ChildChoice& current,
                            std::vector<ChildChoice>& out) {
  out.push_back(current);
  if (current.size() == k) return;
  for (std::size_t i = from; i < pool.size(); ++i) {
    current.push_back(&pool[i]);
    multisets_up_to(pool, k, i, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Rooted classes of subtrees containing `root`, as sorted AHU codes.
///
/// Bottom-up: the classes at v are '(' + m + ')' where m ranges over the
/// sorted multisets built by taking, from each child, nothing or one class of
/// that child. Children whose full subtrees are isomorphic share one class
/// list and are handled together as a multiset choice.
inline std::vector<std::string> rooted_subtree_code_list(const LabeledTree& tree, Vertex root,
                                                         std::size_t set_cap = kDefaultSetCap) {
  using namespace detail;
  auto [parent, order] = tree.bfs(root);
  const std::size_t n = tree.order();
  std::vector<std::string> full(n);
  std::vector<std::shared_ptr<const CodeSet>> classes(n);
  std::unordered_map<std::string, std::shared_ptr<const CodeSet>> memo;

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<Vertex> kids;
    for (Vertex w : tree.neighbors(v))
      if (w != parent[v]) kids.push_back(w);
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return full[a] < full[b]; });
    std::string code = "(";
    for (Vertex k : kids) code += full[k];
    code += ")";
    full[v] = std::move(code);
    if (auto hit = memo.find(full[v]); hit != memo.end()) {
      classes[v] = hit->second;
      continue;
    }

    std::set<ChildChoice, ChoiceLess> states{ChildChoice{}};
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && full[kids[j]] == full[kids[i]]) ++j;
      const CodeSet& pool = *classes[kids[i]];
      std::vector<ChildChoice> options;
      ChildChoice scratch;
      multisets_up_to(pool, j - i, 0, scratch, options);

      std::set<ChildChoice, ChoiceLess> next;
      for (const auto& s : states)
        for (const auto& o : options) {
          ChildChoice merged;
          merged.reserve(s.size() + o.size());
          std::merge(s.begin(), s.end(), o.begin(), o.end(), std::back_inserter(merged),
                     [](CodeRef x, CodeRef y) { return *x < *y; });
          next.insert(std::move(merged));
          if (next.size() > set_cap)
            throw ResourceLimit("rooted class set exceeds cap of " + std::to_string(set_cap));
        }
      states = std::move(next);
      i = j;
    }

    auto result = std::make_shared<CodeSet>();
    result->reserve(states.size());
    for (const auto& s : states) {
      std::string c = "(";
      for (CodeRef r : s) c += *r;
      c += ")";
      result->push_back(std::move(c));
    }
    std::sort(result->begin(), result->end());
    classes[v] = result;
    memo.emplace(full[v], result);
  }
  return *classes[root];
}

/// Rooted classes of subtrees containing the root.
inline SubtreeClassSet nr_set(const LabeledTree& tree, std::size_t set_cap = kDefaultSetCap) {
  return detail::make_class_set(SubtreeClassSet::Mode::rooted,
                                rooted_subtree_code_list(tree, tree.require_root(), set_cap));
}

/// Number of nonisomorphic subtrees containing the root.
inline std::uint64_t nr(const LabeledTree& tree, std::size_t set_cap = kDefaultSetCap) {
  return rooted_subtree_code_list(tree, tree.require_root(), set_cap).size();
}

/// nr by enumerating every subtree through the root and deduplicating AHU codes.
inline std::uint64_t nr_bruteforce(const LabeledTree& tree) {
  const Vertex root = tree.require_root();
  if (tree.order() > kMaxBruteforceOrder)
    throw RangeError("brute-force nr is limited to order 25");
  std::unordered_set<std::string> seen;
  for_each_subtree(tree, [&](VertexMask m) {
    if (contains(m, root))
      seen.insert(detail::rooted_code_within(tree, root, [m](Vertex v) { return contains(m, v); }));
  });
  return seen.size();
}

/// ns through rooted classes: every subtree contains some vertex, so the free
/// classes are the free forms of the rooted classes at all vertices.
inline std::uint64_t ns_from_rooted_classes(const LabeledTree& tree, std::size_t set_cap = kDefaultSetCap) {
  std::unordered_set<std::string> rooted_seen;
  std::unordered_set<CanonicalCode> free_seen;
  for (Vertex v = 0; v < static_cast<Vertex>(tree.order()); ++v)
    for (auto& c : rooted_subtree_code_list(tree, v, set_cap))
      if (rooted_seen.insert(c).second) free_seen.insert(free_code(tree_from_rooted_code({c})));
  return free_seen.size();
}

}  // namespace subtree_iso
