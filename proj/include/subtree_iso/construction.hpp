#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "tree.hpp"

namespace subtree_iso {

/// The lower-bound tree C_n (n >= 8).
///
/// Backbone path x1 - x2 - x3 - v_1 - ... - v_m - y1 - y2 - y3 with
/// m = floor(n/4) - 2, a vertex z hanging from x2, a pendant leaf and a
/// pendant 2-path on every v_i, and residue-dependent extra leaves:
///
///   n mod 4 | leaves at x3 | leaves at y1
///   --------+--------------+-------------
///      0    |      1       |      0
///      1    |      1       |      1
///      2    |      2       |      1
///      3    |      2       |      2
///
/// The diameter pairs of C_n are exactly (x1, y3) and (z, y3).
struct Construction {
  int n = 0;
  int m = 0;
  LabeledTree tree;
  Vertex x1 = 0, x2 = 0, x3 = 0, y1 = 0, y2 = 0, y3 = 0, z = 0;
  std::vector<Vertex> core;         // v_1..v_m
  std::vector<Vertex> core_leaf;    // pendant leaf of v_i
  std::vector<Vertex> core_middle;  // a_i, adjacent to v_i
  std::vector<Vertex> core_end;     // b_i, adjacent to a_i
  std::vector<Vertex> x3_leaves;
  std::vector<Vertex> y1_leaves;

  std::map<Vertex, std::string> names() const {
    std::map<Vertex, std::string> out{{x1, "x1"}, {x2, "x2"}, {x3, "x3"}, {y1, "y1"},
                                      {y2, "y2"}, {y3, "y3"}, {z, "z"}};
    for (int i = 0; i < m; ++i) {
      const auto k = std::to_string(i + 1);
      out[core[i]] = "v" + k;
      out[core_leaf[i]] = "l" + k;
      out[core_middle[i]] = "a" + k;
      out[core_end[i]] = "b" + k;
    }
    return out;
  }
};

inline Construction build_construction(int n) {
  if (n < 8) throw RangeError("the construction needs n >= 8, got " + std::to_string(n));
  Construction c;
  c.n = n;
  c.m = n / 4 - 2;
  std::vector<Edge> edges;
  Vertex next = 0;
  auto fresh = [&] { return next++; };
  auto attach = [&](Vertex to) {
    const Vertex v = fresh();
    edges.emplace_back(to, v);
    return v;
  };

  std::vector<Vertex> backbone;
  c.x1 = fresh();
  c.x2 = fresh();
  c.x3 = fresh();
  backbone = {c.x1, c.x2, c.x3};
  for (int i = 0; i < c.m; ++i) {
    c.core.push_back(fresh());
    backbone.push_back(c.core.back());
  }
  c.y1 = fresh();
  c.y2 = fresh();
  c.y3 = fresh();
  backbone.insert(backbone.end(), {c.y1, c.y2, c.y3});
  for (std::size_t i = 1; i < backbone.size(); ++i) edges.emplace_back(backbone[i - 1], backbone[i]);

  c.z = attach(c.x2);
  for (Vertex v : c.core) {
    c.core_leaf.push_back(attach(v));
    c.core_middle.push_back(attach(v));
    c.core_end.push_back(attach(c.core_middle.back()));
  }

  static constexpr int kX3Leaves[4] = {1, 1, 2, 2};
  static constexpr int kY1Leaves[4] = {0, 1, 1, 2};
  for (int i = 0; i < kX3Leaves[n % 4]; ++i) c.x3_leaves.push_back(attach(c.x3));
  for (int i = 0; i < kY1Leaves[n % 4]; ++i) c.y1_leaves.push_back(attach(c.y1));

  c.tree = LabeledTree::from_edges(static_cast<std::size_t>(next), edges);
  if (static_cast<int>(c.tree.order()) != n) throw std::logic_error("construction order mismatch");
  return c;
}

/// Lower bound on ns(C_n) from counting subtrees that contain the backbone
/// and z: 5 choices per v_i times the choices at x3 and y1.
inline std::uint64_t construction_bound(int n) {
  if (n < 8) throw RangeError("the construction needs n >= 8, got " + std::to_string(n));
  static constexpr std::uint64_t kFactor[4] = {2, 4, 6, 9};
  std::uint64_t bound = kFactor[n % 4];
  for (int i = 0; i < n / 4 - 2; ++i) {
    if (bound > UINT64_MAX / 5) throw ResourceLimit("construction bound exceeds 64 bits");
    bound *= 5;
  }
  return bound;
}

/// All vertex pairs (u < v) at maximum distance.
inline std::vector<Edge> diameter_pairs(const LabeledTree& tree) {
  const auto n = static_cast<Vertex>(tree.order());
  std::vector<Edge> best;
  int diameter = -1;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : tree.neighbors(queue[h]))
        if (dist[w] < 0) {
          dist[w] = dist[queue[h]] + 1;
          queue.push_back(w);
        }
    for (Vertex t = s + 1; t < n; ++t) {
      if (dist[t] > diameter) {
        diameter = dist[t];
        best.clear();
      }
      if (dist[t] == diameter) best.emplace_back(s, t);
    }
  }
  return best;
}

}  // namespace subtree_iso
