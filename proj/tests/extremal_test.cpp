#include <gtest/gtest.h>

#include <cmath>

#include "subtree_iso/canonical.hpp"
#include "subtree_iso/counting.hpp"
#include "subtree_iso/exact.hpp"
#include "subtree_iso/extremal.hpp"

using namespace subtree_iso;

TEST(ComputeS, SmallOrders) {
  const auto s1 = compute_S(1);
  EXPECT_EQ(s1.value, 1u);
  ASSERT_EQ(s1.witnesses.size(), 1u);
  EXPECT_EQ(s1.witnesses[0].order(), 1u);
  EXPECT_EQ(compute_S(8).value, 16u);
}

TEST(ComputeR, OrderSevenIsTheLargestExceptionalTree) {
  const auto r7 = compute_R(7);
  EXPECT_EQ(r7.value, 16u);
  const auto e10 = LabeledTree::from_level_sequence(std::vector<int>{1, 2, 3, 4, 3, 2, 2});
  EXPECT_NE(std::find(r7.witness_codes.begin(), r7.witness_codes.end(), rooted_code(e10)), r7.witness_codes.end());
}

TEST(ComputeSR, RangeLimits) {
  EXPECT_THROW(compute_S(0), RangeError);
  EXPECT_THROW(compute_S(15), RangeError);
  EXPECT_THROW(compute_R(17), RangeError);
  SearchOptions wide;
  wide.limits.max_s_order = 20;
  wide.limits.max_generate_order = 5;
  EXPECT_THROW(compute_S(6, wide), RangeError);
}

TEST(ComputeSR, WitnessesAttainValueAndAreSorted) {
  for (int n = 1; n <= 9; ++n) {
    const auto s = compute_S(n);
    EXPECT_TRUE(std::is_sorted(s.witness_codes.begin(), s.witness_codes.end()));
    EXPECT_TRUE(std::adjacent_find(s.witness_codes.begin(), s.witness_codes.end()) == s.witness_codes.end());
    for (const auto& w : s.witnesses) EXPECT_EQ(ns(w), s.value);
    const auto r = compute_R(n);
    EXPECT_TRUE(std::is_sorted(r.witness_codes.begin(), r.witness_codes.end()));
    for (const auto& w : r.witnesses) EXPECT_EQ(nr(w), r.value);
  }
}

TEST(ComputeSR, ParallelMatchesSerial) {
  SearchOptions serial;
  SearchOptions parallel;
  parallel.threads = 4;
  for (int n : {7, 9, 10}) {
    const auto a = compute_S(n, serial);
    const auto b = compute_S(n, parallel);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness_codes, b.witness_codes);
    const auto c = compute_R(n, serial);
    const auto d = compute_R(n, parallel);
    EXPECT_EQ(c.value, d.value);
    EXPECT_EQ(c.witness_codes, d.witness_codes);
  }
}

TEST(Table, ReproducesPublishedRows) {
  const auto rows = extremal_table(10);
  const std::uint64_t s[] = {1, 2, 3, 4, 6, 8, 11, 16, 23, 33};
  const std::uint64_t r[] = {1, 2, 3, 5, 7, 11, 16, 24, 34, 54};
  ASSERT_EQ(rows.size(), 10u);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(rows[i].s, s[i]);
    EXPECT_EQ(rows[i].r, r[i]);
    EXPECT_TRUE(rows[i].chain_ok()) << "n=" << rows[i].n;
  }
}

TEST(Table, CsvAndText) {
  const auto rows = extremal_table(4);
  const auto csv = table_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,S_n,R_n,lower_2*5^(n/4-2),R_n+3*2^(n/2-1),5^(n/4),S_n/5^(n/4),n_mod_4,bounds_ok");
  EXPECT_NE(csv.find("\n4,4,5,"), std::string::npos);
  const auto text = table_text(rows);
  EXPECT_NE(text.find("by residue"), std::string::npos);
}

TEST(SearchCsv, Row) {
  const auto r = compute_R(4);
  EXPECT_EQ(search_csv_header(ExtremalKind::R), "n,R_n,witness_count,first_witness_levelseq\n");
  EXPECT_EQ(search_csv_row(r), "4,5,1,1 2 3 2\n");
}

// The exact comparisons agree with long double wherever the margin is not tiny.
TEST(Exact, AgreesWithFloatingPointAwayFromTies) {
  for (unsigned n = 1; n <= 30; ++n)
    for (std::uint64_t v = 0; v < 2000; v += 7) {
      const long double p = std::pow(5.0L, n / 4.0L);
      if (std::fabs(static_cast<long double>(v) - p) > 1e-6L) {
        EXPECT_EQ(exact::at_most_pow5_quarter(v, n), static_cast<long double>(v) <= p);
      }
      const long double lb = 2.0L * std::pow(5.0L, n / 4.0L - 2.0L);
      if (std::fabs(static_cast<long double>(v) - lb) > 1e-6L) {
        EXPECT_EQ(exact::at_least_lower_bound(v, n), static_cast<long double>(v) >= lb);
      }
      const long double cb = 3.0L * std::pow(2.0L, n / 2.0L - 1.0L);
      if (std::fabs(static_cast<long double>(v) - cb) > 1e-6L) {
        EXPECT_EQ(exact::at_most_three_half_pow2(v, n), static_cast<long double>(v) <= cb);
      }
    }
}

TEST(Exact, Ties) {
  EXPECT_TRUE(exact::at_most_pow5_quarter(25, 8));
  EXPECT_FALSE(exact::at_most_pow5_quarter(26, 8));
  EXPECT_TRUE(exact::at_most_pow5_quarter_minus_one(24, 8));
  EXPECT_FALSE(exact::at_most_pow5_quarter_minus_one(25, 8));
  EXPECT_TRUE(exact::at_least_lower_bound(2, 8));
  EXPECT_FALSE(exact::at_least_lower_bound(1, 8));
  EXPECT_TRUE(exact::at_most_three_half_pow2(48, 10));
  EXPECT_FALSE(exact::at_most_three_half_pow2(49, 10));
  EXPECT_THROW(exact::pow(5, 60), ResourceLimit);
}
