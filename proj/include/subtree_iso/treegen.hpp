#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "tree.hpp"

namespace subtree_iso {

inline constexpr int kDefaultMaxGenerateOrder = 18;

/// Enumerates canonical level sequences of rooted trees of order n in
/// decreasing lexicographic order, from the path 1 2 ... n down to the star
/// 1 2 2 ... 2. Each rooted isomorphism class appears exactly once.
class LevelSequenceGenerator {
 public:
  explicit LevelSequenceGenerator(int n, int max_order = kDefaultMaxGenerateOrder) {
    if (n < 1 || n > max_order)
      throw RangeError("tree order " + std::to_string(n) + " is outside 1.." + std::to_string(max_order));
    levels_.resize(n);
    for (int i = 0; i < n; ++i) levels_[i] = i + 1;
  }

  const std::vector<int>& levels() const noexcept { return levels_; }
  LabeledTree tree() const { return LabeledTree::from_level_sequence(levels_); }

  /// Advances to the successor; false once the star has been produced.
  bool next() {
    const int n = static_cast<int>(levels_.size());
    int p = n - 1;
    while (p >= 0 && levels_[p] <= 2) --p;
    if (p < 0) return false;
    int q = p - 1;
    while (levels_[q] != levels_[p] - 1) --q;
    const int shift = p - q;
    for (int i = p; i < n; ++i) levels_[i] = levels_[i - shift];
    return true;
  }

 private:
  std::vector<int> levels_;
};

template <class Visit>
void for_each_rooted_tree(int n, Visit&& visit, int max_order = kDefaultMaxGenerateOrder) {
  LevelSequenceGenerator gen(n, max_order);
  do {
    visit(gen.tree());
  } while (gen.next());
}

/// True when this rooting is the one chosen to represent the free tree: the
/// root is a centroid, and with two centroids its rooted code is the smaller.
inline bool is_centroid_canonical_rooting(const LabeledTree& rooted) {
  const Vertex root = rooted.require_root();
  const auto c = centroids(rooted);
  if (c.size() == 1) return c[0] == root;
  if (c[0] != root && c[1] != root) return false;
  const Vertex other = c[0] == root ? c[1] : c[0];
  return rooted_code(rooted, root) <= rooted_code(rooted, other);
}

/// The free tree rooted at the vertex chosen by is_centroid_canonical_rooting.
inline LabeledTree centroid_canonical_rooting(const LabeledTree& tree) {
  const auto c = centroids(tree);
  if (c.size() == 1 || rooted_code(tree, c[0]) <= rooted_code(tree, c[1])) return tree.with_root(c[0]);
  return tree.with_root(c[1]);
}

/// Each free tree of order n exactly once (rooted at its canonical centroid).
template <class Visit>
void for_each_free_tree(int n, Visit&& visit, int max_order = kDefaultMaxGenerateOrder) {
  for_each_rooted_tree(
      n,
      [&](LabeledTree t) {
        if (is_centroid_canonical_rooting(t)) visit(t.unrooted());
      },
      max_order);
}

inline std::vector<LabeledTree> rooted_trees(int n, int max_order = kDefaultMaxGenerateOrder) {
  std::vector<LabeledTree> out;
  for_each_rooted_tree(n, [&](LabeledTree t) { out.push_back(std::move(t)); }, max_order);
  return out;
}

inline std::vector<LabeledTree> free_trees(int n, int max_order = kDefaultMaxGenerateOrder) {
  std::vector<LabeledTree> out;
  for_each_free_tree(n, [&](LabeledTree t) { out.push_back(std::move(t)); }, max_order);
  return out;
}

}  // namespace subtree_iso
