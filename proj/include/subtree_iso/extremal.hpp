#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "counting.hpp"
#include "exact.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "parallel.hpp"
#include "treegen.hpp"

namespace subtree_iso {

enum class ExtremalKind { S, R };

/// Maximum of ns (kind S, over free trees) or nr (kind R, over rooted trees)
/// at one order, with every tree attaining it.
struct ExtremalRecord {
  int n = 0;
  ExtremalKind kind = ExtremalKind::S;
  std::uint64_t value = 0;
  std::vector<LabeledTree> witnesses;      // sorted by code
  std::vector<CanonicalCode> witness_codes;

  /// Level sequence of the first witness (free witnesses use their
  /// canonical centroid rooting).
  std::string first_witness_levelseq() const {
    if (witnesses.empty()) return {};
    const auto& w = witnesses.front();
    return level_sequence_string(w.rooted() ? w : centroid_canonical_rooting(w));
  }
};

struct SearchOptions {
  unsigned threads = 1;
  Limits limits{};
};

namespace detail {

inline ExtremalRecord reduce_max(int n, ExtremalKind kind, const std::vector<LabeledTree>& trees,
                                 const std::vector<std::uint64_t>& values) {
  ExtremalRecord rec;
  rec.n = n;
  rec.kind = kind;
  rec.value = *std::max_element(values.begin(), values.end());
  std::vector<std::pair<CanonicalCode, const LabeledTree*>> hits;
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (values[i] == rec.value)
      hits.emplace_back(kind == ExtremalKind::S ? free_code(trees[i]) : rooted_code(trees[i]), &trees[i]);
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [code, tree] : hits) {
    rec.witness_codes.push_back(code);
    rec.witnesses.push_back(*tree);
  }
  return rec;
}

inline void check_order(int n, int cap, const char* what) {
  if (n < 1 || n > cap)
    throw RangeError(std::string(what) + " order " + std::to_string(n) + " is outside 1.." +
                     std::to_string(cap));
}

}  // namespace detail

inline ExtremalRecord compute_S(int n, const SearchOptions& opts = {}) {
  detail::check_order(n, std::min(opts.limits.max_s_order, opts.limits.max_generate_order), "S_n");
  const auto trees = free_trees(n, opts.limits.max_generate_order);
  const auto values = parallel_map(trees, [](const LabeledTree& t) { return ns(t); }, opts.threads);
  return detail::reduce_max(n, ExtremalKind::S, trees, values);
}

inline ExtremalRecord compute_R(int n, const SearchOptions& opts = {}) {
  detail::check_order(n, std::min(opts.limits.max_r_order, opts.limits.max_generate_order), "R_n");
  const auto trees = rooted_trees(n, opts.limits.max_generate_order);
  const std::size_t cap = opts.limits.set_cap;
  const auto values =
      parallel_map(trees, [cap](const LabeledTree& t) { return nr(t, cap); }, opts.threads);
  return detail::reduce_max(n, ExtremalKind::R, trees, values);
}

inline std::string search_csv_header(ExtremalKind kind) {
  return std::string("n,") + (kind == ExtremalKind::S ? "S_n" : "R_n") +
         ",witness_count,first_witness_levelseq\n";
}

inline std::string search_csv_row(const ExtremalRecord& rec) {
  return std::to_string(rec.n) + "," + std::to_string(rec.value) + "," +
         std::to_string(rec.witnesses.size()) + "," + rec.first_witness_levelseq() + "\n";
}

/// One line of the extremal table together with the bound chain
///   2*5^{n/4-2} <= S_n <= R_n + 3*2^{n/2-1},   R_n <= 5^{n/4},
/// decided exactly. The floating-point columns are for display only.
struct TableRow {
  int n = 0;
  std::uint64_t s = 0;
  std::uint64_t r = 0;
  std::size_t s_witnesses = 0;
  std::size_t r_witnesses = 0;
  bool lower_ok = false;
  bool gap_ok = false;
  bool upper_ok = false;

  double lower_bound() const { return 2.0 * std::pow(5.0, n / 4.0 - 2.0); }
  double gap_bound() const { return static_cast<double>(r) + 3.0 * std::pow(2.0, n / 2.0 - 1.0); }
  double upper_bound() const { return std::pow(5.0, n / 4.0); }
  double ratio() const { return static_cast<double>(s) / upper_bound(); }
  bool chain_ok() const { return lower_ok && gap_ok && upper_ok; }
};

inline TableRow make_table_row(const ExtremalRecord& s, const ExtremalRecord& r) {
  TableRow row;
  row.n = s.n;
  row.s = s.value;
  row.r = r.value;
  row.s_witnesses = s.witnesses.size();
  row.r_witnesses = r.witnesses.size();
  const auto n = static_cast<unsigned>(row.n);
  row.lower_ok = exact::at_least_lower_bound(row.s, n);
  row.gap_ok = exact::within_centroid_gap(row.s, row.r, n);
  row.upper_ok = exact::at_most_pow5_quarter(row.r, n);
  return row;
}

inline std::vector<TableRow> extremal_table(int max_n, const SearchOptions& opts = {}) {
  std::vector<TableRow> rows;
  for (int n = 1; n <= max_n; ++n) rows.push_back(make_table_row(compute_S(n, opts), compute_R(n, opts)));
  return rows;
}

inline std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,S_n,R_n,lower_2*5^(n/4-2),R_n+3*2^(n/2-1),5^(n/4),S_n/5^(n/4),n_mod_4,bounds_ok\n";
  os << std::setprecision(6);
  for (const auto& r : rows)
    os << r.n << ',' << r.s << ',' << r.r << ',' << r.lower_bound() << ',' << r.gap_bound() << ','
       << r.upper_bound() << ',' << r.ratio() << ',' << r.n % 4 << ',' << (r.chain_ok() ? 1 : 0) << '\n';
  return os.str();
}

inline std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::setw(4) << "n" << std::setw(10) << "S_n" << std::setw(10) << "R_n" << std::setw(14)
     << "2*5^(n/4-2)" << std::setw(16) << "R+3*2^(n/2-1)" << std::setw(12) << "5^(n/4)"
     << std::setw(12) << "S/5^(n/4)" << std::setw(8) << "bounds" << '\n';
  os << std::fixed << std::setprecision(3);
  for (const auto& r : rows)
    os << std::setw(4) << r.n << std::setw(10) << r.s << std::setw(10) << r.r << std::setw(14)
       << r.lower_bound() << std::setw(16) << r.gap_bound() << std::setw(12) << r.upper_bound()
       << std::setw(12) << r.ratio() << std::setw(8) << (r.chain_ok() ? "ok" : "FAIL") << '\n';

  os << "\nS_n/5^(n/4) by residue of n mod 4:\n";
  for (int residue = 0; residue < 4; ++residue) {
    os << "  n = " << residue << " mod 4:";
    for (const auto& r : rows)
      if (r.n % 4 == residue) os << "  n=" << r.n << ": " << r.ratio();
    os << '\n';
  }
  return os.str();
}

}  // namespace subtree_iso
