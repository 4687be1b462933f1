// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "subtree_iso/subtree_iso.hpp"

using namespace subtree_iso;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.size() < 2000) detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> run;
};

SearchOptions options() {
  SearchOptions o;
  o.threads = default_parallelism();
  return o;
}

Outcome table_reproduction() {
  Outcome out;
  const auto rows = extremal_table(10, options());
  const std::vector<std::uint64_t> s{1, 2, 3, 4, 6, 8, 11, 16, 23, 33};
  const std::vector<std::uint64_t> r{1, 2, 3, 5, 7, 11, 16, 24, 34, 54};
  std::vector<std::uint64_t> got_s, got_r;
  for (const auto& row : rows) {
    got_s.push_back(row.s);
    got_r.push_back(row.r);
    out.require(row.chain_ok(), "bound chain fails at n=" + std::to_string(row.n));
  }
  out.require(got_s == s, "S row differs");
  out.require(got_r == r, "R row differs");
  return out;
}

Outcome exceptional_catalog() {
  Outcome out;
  const auto cat = find_exceptional();
  std::multiset<std::size_t> orders;
  std::multiset<std::uint64_t> values;
  for (const auto& e : cat.entries) {
    orders.insert(e.tree.order());
    values.insert(e.nr);
  }
  out.require(cat.size() == 10, std::to_string(cat.size()) + " trees");
  out.require(orders == std::multiset<std::size_t>{1, 2, 3, 3, 4, 5, 5, 5, 6, 7}, "orders differ");
  out.require(values == std::multiset<std::uint64_t>{1, 2, 3, 3, 5, 7, 7, 7, 11, 16}, "nr values differ");
  return out;
}

Outcome report_outcome(const VerificationReport& rep) {
  Outcome out;
  out.require(rep.passed(), to_text(rep));
  out.detail = out.ok ? std::to_string(rep.checked) + " checked" : out.detail;
  return out;
}

Outcome aux_inequality() {
  const auto rep = verify_aux_inequality(12, options());
  auto out = report_outcome(rep);
  out.require(rep.checked == 1 + 1 + 2 + 4 + 9 + 20 + 48 + 115 + 286 + 719 + 1842 + 4766,
              "scanned " + std::to_string(rep.checked) + " trees");
  return out;
}

Outcome cases576() {
  const auto rep = verify_576_cases();
  auto out = report_outcome(rep);
  out.require(residual_multisets().size() == 576, "enumeration size differs");
  out.require(rep.checked == 576, "checked " + std::to_string(rep.checked));
  return out;
}

Outcome case2() {
  Outcome out;
  const auto cat = find_exceptional();
  if (cat.size() != 10) {
    out.require(false, "catalog size");
    return out;
  }
  const auto four_e1 = join_at_root({cat[0].tree, cat[0].tree, cat[0].tree, cat[0].tree});
  out.require(four_e1.order() == 5 && nr(four_e1) == 5, "four E1");
  const auto three_e2 = join_at_root({cat[1].tree, cat[1].tree, cat[1].tree});
  out.require(three_e2.order() == 7 && nr(three_e2) == 10, "three E2");
  for (int j = 3; j <= 10; ++j) {
    const auto k = cat[j - 1].nr;
    out.require(nr(join_at_root({cat[j - 1].tree, cat[j - 1].tree})) == (k + 1) * (k + 2) / 2,
                "identical pair E" + std::to_string(j));
  }
  int large_pairs = 0;
  for (int a = 6; a <= 10; ++a)
    for (int b = a + 1; b <= 10; ++b) {
      const auto t = join_at_root({cat[a - 1].tree, cat[b - 1].tree});
      ++large_pairs;
      out.require(exact::at_most_pow5_quarter(nr(t), static_cast<unsigned>(t.order() - 1)),
                  "pair E" + std::to_string(a) + ",E" + std::to_string(b));
    }
  out.require(large_pairs == 10, "large pair count");
  const auto rep = verify_case2_subcases();
  out.require(rep.passed(), to_text(rep));
  return out;
}

Outcome construction() {
  Outcome out;
  for (int n = 8; n <= 24; ++n) {
    const auto c = build_construction(n);
    const auto tag = "n=" + std::to_string(n);
    out.require(c.tree.order() == static_cast<std::size_t>(n), tag + " order");
    std::vector<Edge> expected{std::minmax(c.x1, c.y3), std::minmax(c.z, c.y3)};
    std::sort(expected.begin(), expected.end());
    out.require(diameter_pairs(c.tree) == expected, tag + " diameter pairs");
    const auto bound = construction_bound(n);
    out.require(ns(c.tree) >= bound, tag + " ns below bound");
    out.require(exact::at_least_lower_bound(bound, static_cast<unsigned>(n)), tag + " bound below 2*5^(n/4-2)");
  }
  const auto rep = verify_construction(24, options());
  out.require(rep.passed(), to_text(rep));
  return out;
}

Outcome lemma() { return report_outcome(verify_lemma(11, options())); }

Outcome oracle_equivalence() {
  Outcome out;
  std::size_t checked = 0;
  for (int n = 1; n <= 10; ++n)
    for_each_rooted_tree(n, [&](const LabeledTree& t) {
      ++checked;
      if (nr(t) != nr_bruteforce(t)) out.require(false, "nr mismatch at " + level_sequence_string(t));
    });
  out.require(checked == 1 + 1 + 2 + 4 + 9 + 20 + 48 + 115 + 286 + 719, "rooted tree count");

  std::mt19937 rng(20240611);
  for (int i = 0; i < 50; ++i) {
    const auto t = oracle::random_tree(12, rng);
    const auto base = ns(t);
    for (int k = 0; k < 100; ++k)
      if (ns(t.relabeled(oracle::random_permutation(12, rng))) != base) {
        out.require(false, "ns changed under relabeling");
        break;
      }
  }
  return out;
}

Outcome classical_counts() {
  Outcome out;
  for (std::size_t n = 1; n <= 20; ++n) {
    out.require(count_subtrees_total(path_tree(n)) == oracle::binomial(n + 1, 2), "path total n=" + std::to_string(n));
    out.require(ns(path_tree(n)) == n, "ns(P_n) n=" + std::to_string(n));
    out.require(ns(star_tree(n)) == n, "ns(K_1,n-1) n=" + std::to_string(n));
  }
  for (int n = 1; n <= 10; ++n)
    for_each_free_tree(n, [&](const LabeledTree& t) {
      if (ns(t) < static_cast<std::uint64_t>(n)) out.require(false, "ns < n");
    });
  return out;
}

Outcome centroid_bound() {
  const auto rep = verify_centroid_bound(12, options());
  auto out = report_outcome(rep);
  out.require(rep.checked == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551, "free tree count");
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction S_n, R_n for n <= 10", 60.0, table_reproduction},
      {2, "exceptional catalog: ten trees", 1.0, exceptional_catalog},
      {3, "aux inequality over rooted trees of order <= 12", 600.0, aux_inequality},
      {4, "576 residual cases", 1.0, cases576},
      {5, "case-2 subcases", 0.0, case2},
      {6, "construction C_n for 8 <= n <= 24", 300.0, construction},
      {7, "lemma inequalities, total order <= 11", 0.0, lemma},
      {8, "nr oracle equivalence and ns relabeling stability", 0.0, oracle_equivalence},
      {9, "classical subtree counts", 0.0, classical_counts},
      {10, "centroid-avoiding bound, order <= 12", 0.0, centroid_bound},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      out.ok = false;
      out.detail += " (took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s)";
    }
    if (!out.ok) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << timing << "]";
    if (!out.ok || !out.detail.empty()) std::cout << " -- " << out.detail;
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
