#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "construction.hpp"
#include "counting.hpp"
#include "exact.hpp"
#include "extremal.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "treegen.hpp"

// Finite checks behind the 5^{n/4} bounds on R_n and S_n:
//  - the rooted trees violating nr <= 5^{n/4} - 1 (the exceptional catalog),
//  - the merge and branch-product inequalities for nr,
//  - the subcases and the residual 576 branch multisets of the induction,
//  - the centroid-avoiding subtree bound,
//  - the lower-bound construction C_n.

namespace subtree_iso {

using VerifyOptions = SearchOptions;

/// Rooted trees with nr > 5^{n/4} - 1, sorted by (order, nr, code) and named
/// E1, E2, ... in that order.
struct ExceptionalCatalog {
  struct Entry {
    LabeledTree tree;
    CanonicalCode code;
    std::uint64_t nr = 0;
  };
  std::vector<Entry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const Entry& operator[](std::size_t i) const { return entries.at(i); }

  std::optional<std::size_t> index_of(const CanonicalCode& code) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (entries[i].code == code) return i;
    return std::nullopt;
  }
  bool contains(const LabeledTree& rooted) const { return index_of(rooted_code(rooted)).has_value(); }
};

inline bool violates_aux_inequality(std::uint64_t nr_value, std::size_t order) {
  return !exact::at_most_pow5_quarter_minus_one(nr_value, static_cast<unsigned>(order));
}

/// Scans every rooted tree of order 1..max_order.
inline ExceptionalCatalog find_exceptional(int max_order = 7) {
  ExceptionalCatalog cat;
  for (int n = 1; n <= max_order; ++n)
    for_each_rooted_tree(n, [&](LabeledTree t) {
      const auto value = nr(t);
      if (violates_aux_inequality(value, t.order()))
        cat.entries.push_back({t, rooted_code(t), value});
    }, std::max(max_order, kDefaultMaxGenerateOrder));
  std::sort(cat.entries.begin(), cat.entries.end(), [](const auto& a, const auto& b) {
    if (a.tree.order() != b.tree.order()) return a.tree.order() < b.tree.order();
    if (a.nr != b.nr) return a.nr < b.nr;
    return a.code < b.code;
  });
  return cat;
}

/// Catalog shape: ten trees, the expected orders and nr values, each within
/// nr <= 5^{n/4}, and for n = 4..7 the largest violator equals R_n.
inline VerificationReport verify_exceptional(const VerifyOptions& opts = {}) {
  auto rep = make_report("exceptional", "rooted trees of order 1..7");
  const auto cat = find_exceptional();
  static constexpr std::array<std::size_t, 10> kOrders{1, 2, 3, 3, 4, 5, 5, 5, 6, 7};
  static constexpr std::array<std::uint64_t, 10> kNr{1, 2, 3, 3, 5, 7, 7, 7, 11, 16};
  rep.expected = kOrders.size();
  rep.checked = cat.size();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& e = cat[i];
    rep.notes.push_back("E" + std::to_string(i + 1) + ": order " + std::to_string(e.tree.order()) +
                        ", nr " + std::to_string(e.nr) + ", levelseq " + level_sequence_string(e.tree));
    if (!exact::at_most_pow5_quarter(e.nr, static_cast<unsigned>(e.tree.order())))
      rep.fail(level_sequence_string(e.tree), "nr exceeds 5^(n/4)");
  }
  if (cat.size() != kOrders.size()) {
    rep.fail("-", "catalog has " + std::to_string(cat.size()) + " trees, expected 10");
    return rep;
  }
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat[i].tree.order() != kOrders[i] || cat[i].nr != kNr[i])
      rep.fail(level_sequence_string(cat[i].tree),
               "E" + std::to_string(i + 1) + " has order " + std::to_string(cat[i].tree.order()) +
                   " and nr " + std::to_string(cat[i].nr));
  for (int n = 4; n <= 7; ++n) {
    std::uint64_t largest = 0;
    for (const auto& e : cat.entries)
      if (static_cast<int>(e.tree.order()) == n) largest = std::max(largest, e.nr);
    const auto r = compute_R(n, opts).value;
    if (largest != r)
      rep.fail("-", "largest exceptional nr at order " + std::to_string(n) + " is " +
                        std::to_string(largest) + " but R_n = " + std::to_string(r));
  }
  return rep;
}

/// nr(R1 merged with R2 at the root) <= nr(R1) * nr(R2) - 1 for all unordered
/// pairs of rooted trees of order >= 2 whose merge has order <= n_max, and
/// nr(T) <= prod (nr(T_j) + 1) over the root branches of every rooted tree of
/// order <= n_max.
inline VerificationReport verify_lemma(int n_max = 11, const VerifyOptions& opts = {}) {
  auto rep = make_report("lemma", "merged order <= " + std::to_string(n_max));
  const int gen_cap = opts.limits.max_generate_order;
  if (n_max < 1 || n_max > gen_cap) throw RangeError("lemma check order outside 1.." + std::to_string(gen_cap));

  std::vector<std::vector<LabeledTree>> by_order(n_max + 2);
  std::vector<std::vector<std::uint64_t>> nr_by_order(n_max + 2);
  for (int k = 1; k <= std::min(n_max, gen_cap); ++k) {
    by_order[k] = rooted_trees(k, gen_cap);
    nr_by_order[k] = parallel_map(by_order[k], [](const LabeledTree& t) { return nr(t); }, opts.threads);
  }

  struct Pair {
    int a_order = 0, b_order = 0;
    std::size_t a = 0, b = 0;
  };
  std::vector<Pair> pairs;
  for (int s1 = 2; s1 <= n_max; ++s1)
    for (int s2 = s1; s1 + s2 - 1 <= n_max; ++s2)
      for (std::size_t i = 0; i < by_order[s1].size(); ++i)
        for (std::size_t j = (s1 == s2 ? i : 0); j < by_order[s2].size(); ++j) pairs.push_back({s1, s2, i, j});

  const auto merge_ok = parallel_map(
      pairs,
      [&](const Pair& p) {
        const auto& a = by_order[p.a_order][p.a];
        const auto& b = by_order[p.b_order][p.b];
        const auto merged = nr(merge_at_root(a, b));
        return merged + 1 <= nr_by_order[p.a_order][p.a] * nr_by_order[p.b_order][p.b] ? 1 : 0;
      },
      opts.threads);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!merge_ok[i]) {
      const auto& p = pairs[i];
      rep.fail(level_sequence_string(by_order[p.a_order][p.a]) + " + " +
                   level_sequence_string(by_order[p.b_order][p.b]),
               "merge inequality nr(T) <= nr(R1) nr(R2) - 1 fails");
    }

  std::size_t product_checks = 0;
  for (int k = 1; k <= n_max; ++k) {
    const auto ok = parallel_map(
        by_order[k],
        [](const LabeledTree& t) {
          std::uint64_t bound = 1;
          for (const auto& br : t.root_branches()) bound *= nr(br) + 1;
          return nr(t) <= bound ? 1 : 0;
        },
        opts.threads);
    product_checks += ok.size();
    for (std::size_t i = 0; i < ok.size(); ++i)
      if (!ok[i]) rep.fail(level_sequence_string(by_order[k][i]), "branch product inequality fails");
  }
  rep.checked = pairs.size() + product_checks;
  rep.notes.push_back(std::to_string(pairs.size()) + " merged pairs, " + std::to_string(product_checks) +
                      " branch decompositions");
  return rep;
}

/// Exhaustive scan of nr <= 5^{n/4} - 1 over rooted trees of order <= n_max;
/// the violators must be exactly the catalog members, and each of those must
/// still satisfy nr <= 5^{n/4}.
inline VerificationReport verify_aux_inequality(int n_max = 12, const VerifyOptions& opts = {}) {
  auto rep = make_report("aux", "rooted trees of order 1.." + std::to_string(n_max));
  const auto cat = find_exceptional();
  std::vector<char> seen(cat.size(), 0);
  for (int n = 1; n <= n_max; ++n) {
    const auto trees = rooted_trees(n, opts.limits.max_generate_order);
    const std::size_t cap = opts.limits.set_cap;
    const auto values = parallel_map(trees, [cap](const LabeledTree& t) { return nr(t, cap); }, opts.threads);
    std::size_t violators = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (!violates_aux_inequality(values[i], trees[i].order())) continue;
      ++violators;
      const auto idx = cat.index_of(rooted_code(trees[i]));
      if (!idx) {
        rep.fail(level_sequence_string(trees[i]),
                 "nr = " + std::to_string(values[i]) + " > 5^(n/4) - 1 and tree is not exceptional");
        continue;
      }
      seen[*idx] = 1;
      if (!exact::at_most_pow5_quarter(values[i], static_cast<unsigned>(n)))
        rep.fail(level_sequence_string(trees[i]), "exceptional tree exceeds 5^(n/4)");
    }
    rep.checked += trees.size();
    rep.notes.push_back("order " + std::to_string(n) + ": " + std::to_string(trees.size()) + " trees, " +
                        std::to_string(violators) + " exceptional");
  }
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (static_cast<int>(cat[i].tree.order()) <= n_max && !seen[i])
      rep.fail(level_sequence_string(cat[i].tree), "catalog tree was not found by the scan");
  return rep;
}

/// The four subcases that close the induction when all branches are exceptional.
inline VerificationReport verify_case2_subcases() {
  auto rep = make_report("case2", "E1^4, E2^3, E_j^2 (j = 3..10), pairs from E6..E10");
  const auto cat = find_exceptional();
  if (cat.size() != 10) {
    rep.fail("-", "exceptional catalog does not have ten trees");
    return rep;
  }
  auto E = [&](int j) -> const LabeledTree& { return cat[j - 1].tree; };
  // nr(R1) <= 5^{(|R1| - 1)/4}
  auto check = [&](const std::string& label, const LabeledTree& r1, std::optional<std::uint64_t> expected_order,
                   std::optional<std::uint64_t> expected_nr) {
    ++rep.checked;
    const auto value = nr(r1);
    const auto order = r1.order();
    rep.notes.push_back(label + ": |R1| = " + std::to_string(order) + ", nr(R1) = " + std::to_string(value));
    if (expected_order && order != *expected_order)
      rep.fail(level_sequence_string(r1), label + ": order " + std::to_string(order) + " != " +
                                              std::to_string(*expected_order));
    if (expected_nr && value != *expected_nr)
      rep.fail(level_sequence_string(r1), label + ": nr " + std::to_string(value) + " != " +
                                              std::to_string(*expected_nr));
    if (!exact::at_most_pow5_quarter(value, static_cast<unsigned>(order - 1)))
      rep.fail(level_sequence_string(r1), label + ": nr(R1) > 5^((|R1|-1)/4)");
  };

  check("four E1", join_at_root({E(1), E(1), E(1), E(1)}), 5, 5);
  check("three E2", join_at_root({E(2), E(2), E(2)}), 7, 10);
  for (int j = 3; j <= 10; ++j) {
    const auto k = cat[j - 1].nr;
    check("two E" + std::to_string(j), join_at_root({E(j), E(j)}), 2 * E(j).order() + 1, (k + 1) * (k + 2) / 2);
  }
  for (int a = 6; a <= 10; ++a)
    for (int b = a + 1; b <= 10; ++b)
      check("E" + std::to_string(a) + " + E" + std::to_string(b), join_at_root({E(a), E(b)}), std::nullopt,
            std::nullopt);
  rep.expected = 2 + 8 + 10;
  return rep;
}

/// One residual branch multiset: copies of E1..E5 and at most one of E6..E10.
struct BranchMultiset {
  std::array<int, 5> small{};  // counts of E1..E5
  int large = 0;               // 0 or j in 6..10

  std::string describe() const {
    std::string out;
    for (int j = 0; j < 5; ++j)
      for (int c = 0; c < small[j]; ++c) out += (out.empty() ? "E" : ",E") + std::to_string(j + 1);
    if (large) out += (out.empty() ? "E" : ",E") + std::to_string(large);
    return "{" + out + "}";
  }
};

/// Up to three E1, two E2, one each of E3, E4, E5, and one of E6..E10.
inline std::vector<BranchMultiset> residual_multisets() {
  std::vector<BranchMultiset> out;
  for (int e1 = 0; e1 <= 3; ++e1)
    for (int e2 = 0; e2 <= 2; ++e2)
      for (int e3 = 0; e3 <= 1; ++e3)
        for (int e4 = 0; e4 <= 1; ++e4)
          for (int e5 = 0; e5 <= 1; ++e5)
            for (int large : {0, 6, 7, 8, 9, 10}) out.push_back({{e1, e2, e3, e4, e5}, large});
  return out;
}

inline LabeledTree join_multiset(const ExceptionalCatalog& cat, const BranchMultiset& ms) {
  std::vector<LabeledTree> branches;
  for (int j = 0; j < 5; ++j)
    for (int c = 0; c < ms.small[j]; ++c) branches.push_back(cat[j].tree);
  if (ms.large) branches.push_back(cat[ms.large - 1].tree);
  return join_at_root(branches);
}

/// Every residual multiset joined at a new root either satisfies
/// nr <= 5^{n/4} - 1 or is itself an exceptional tree.
inline VerificationReport verify_576_cases() {
  auto rep = make_report("cases576", "E1^0..3 E2^0..2 E3,E4,E5^0..1 + one of {none,E6..E10}");
  const auto cat = find_exceptional();
  rep.expected = 576;
  if (cat.size() != 10) {
    rep.fail("-", "exceptional catalog does not have ten trees");
    return rep;
  }
  std::size_t passing = 0;
  std::vector<std::string> exceptional;
  for (const auto& ms : residual_multisets()) {
    ++rep.checked;
    const auto t = join_multiset(cat, ms);
    const auto value = nr(t);
    if (!violates_aux_inequality(value, t.order())) {
      ++passing;
    } else if (auto idx = cat.index_of(rooted_code(t))) {
      exceptional.push_back(ms.describe() + " = E" + std::to_string(*idx + 1));
    } else {
      rep.fail(ms.describe() + " " + level_sequence_string(t),
               "nr = " + std::to_string(value) + " > 5^(n/4) - 1 at order " + std::to_string(t.order()));
    }
  }
  rep.notes.push_back(std::to_string(passing) + " satisfy nr <= 5^(n/4) - 1, " +
                      std::to_string(exceptional.size()) + " are exceptional trees");
  for (const auto& e : exceptional) rep.notes.push_back("exceptional: " + e);
  return rep;
}

/// For every free tree of order <= n_max and each of its centroids v: no
/// centroid branch exceeds n/2 vertices, and
///   #subtrees avoiding v <= sum 2^{|T_i|} <= 3 * 2^{n/2 - 1}.
inline VerificationReport verify_centroid_bound(int n_max = 12, const VerifyOptions& opts = {}) {
  auto rep = make_report("centroid", "free trees of order 1.." + std::to_string(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const auto trees = free_trees(n, opts.limits.max_generate_order);
    const auto verdicts = parallel_map(
        trees,
        [n](const LabeledTree& t) -> std::string {
          for (Vertex v : centroids(t)) {
            std::uint64_t power_sum = 0;
            for (const auto& br : t.branches_at(v)) {
              if (2 * br.order() > static_cast<std::size_t>(n)) return "centroid branch larger than n/2";
              power_sum += std::uint64_t{1} << br.order();
            }
            const auto avoiding = count_subtrees_avoiding(t, v);
            if (avoiding > power_sum) return "avoiding count exceeds sum of 2^|T_i|";
            if (!exact::at_most_three_half_pow2(power_sum, static_cast<unsigned>(n)))
              return "sum of 2^|T_i| = " + std::to_string(power_sum) + " exceeds 3*2^(n/2-1)";
          }
          return {};
        },
        opts.threads);
    for (std::size_t i = 0; i < trees.size(); ++i)
      if (!verdicts[i].empty()) rep.fail(level_sequence_string(centroid_canonical_rooting(trees[i])), verdicts[i]);
    rep.checked += trees.size();
  }
  return rep;
}

/// C_n for 8 <= n <= n_max: order n, diameter pairs {(x1,y3),(z,y3)}, and
/// ns(C_n) >= construction_bound(n) >= 2*5^{n/4-2}.
inline VerificationReport verify_construction(int n_max = 24, const VerifyOptions& opts = {}) {
  auto rep = make_report("construction", "C_n for n = 8.." + std::to_string(n_max));
  if (n_max > static_cast<int>(kMaxEnumerationOrder)) throw RangeError("construction check limited to n <= 64");
  std::vector<int> orders;
  for (int n = 8; n <= n_max; ++n) orders.push_back(n);
  const auto values =
      parallel_map(orders, [](int n) { return ns(build_construction(n).tree); }, opts.threads);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const int n = orders[i];
    const auto c = build_construction(n);
    const auto bound = construction_bound(n);
    const auto label = "C_" + std::to_string(n);
    ++rep.checked;
    rep.notes.push_back(label + ": m = " + std::to_string(c.m) + ", ns = " + std::to_string(values[i]) +
                        ", bound = " + std::to_string(bound));
    if (static_cast<int>(c.tree.order()) != n) rep.fail(label, "order " + std::to_string(c.tree.order()));
    auto expected_pairs = std::vector<Edge>{std::minmax(c.x1, c.y3), std::minmax(c.z, c.y3)};
    std::sort(expected_pairs.begin(), expected_pairs.end());
    if (diameter_pairs(c.tree) != expected_pairs) rep.fail(label, "diameter pairs differ from {(x1,y3),(z,y3)}");
    if (values[i] < bound) rep.fail(label, "ns = " + std::to_string(values[i]) + " < " + std::to_string(bound));
    if (!exact::at_least_lower_bound(bound, static_cast<unsigned>(n)))
      rep.fail(label, "bound " + std::to_string(bound) + " < 2*5^(n/4-2)");
  }
  return rep;
}

inline const std::vector<std::string>& verification_check_names() {
  static const std::vector<std::string> names{"exceptional", "lemma",  "aux",         "case2",
                                              "cases576",    "centroid", "construction"};
  return names;
}

/// Runs one named check (or "all") with its default range unless n_max is given.
inline std::vector<VerificationReport> run_verification(const std::string& name, std::optional<int> n_max,
                                                        const VerifyOptions& opts = {}) {
  std::vector<VerificationReport> out;
  const bool all = name == "all";
  if (!all && std::find(verification_check_names().begin(), verification_check_names().end(), name) ==
                  verification_check_names().end())
    throw InvalidArgument("unknown check '" + name + "'");
  if (all || name == "exceptional") out.push_back(verify_exceptional(opts));
  if (all || name == "lemma") out.push_back(verify_lemma(n_max.value_or(11), opts));
  if (all || name == "aux") out.push_back(verify_aux_inequality(n_max.value_or(12), opts));
  if (all || name == "case2") out.push_back(verify_case2_subcases());
  if (all || name == "cases576") out.push_back(verify_576_cases());
  if (all || name == "centroid") out.push_back(verify_centroid_bound(n_max.value_or(12), opts));
  if (all || name == "construction") out.push_back(verify_construction(n_max.value_or(24), opts));
  return out;
}

}  // namespace subtree_iso
