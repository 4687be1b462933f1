// subtree-iso: count nonisomorphic subtrees, search extremal trees, build the
// lower-bound construction and run the finite bound checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource limit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "subtree_iso/subtree_iso.hpp"

namespace si = subtree_iso;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Common {
  unsigned parallel = si::default_parallelism();
  std::size_t set_cap = si::kDefaultSetCap;
  std::string out_path;

  si::SearchOptions options() const {
    si::SearchOptions o;
    o.threads = parallel;
    o.limits = si::Limits::from_environment();
    o.limits.set_cap = set_cap;
    return o;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw si::ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Common& common, const std::string& text) {
  if (common.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(common.out_path);
  if (!out) throw si::InvalidArgument("cannot write '" + common.out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonisomorphic subtree counting and extremal tree search"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--parallel", common.parallel, "Worker threads for search and verify")
      ->check(CLI::PositiveNumber);
  app.add_option("--set-cap", common.set_cap, "Cap on intermediate rooted class sets")
      ->capture_default_str();
  app.add_option("--out", common.out_path, "Write output to PATH instead of stdout");

  // count
  auto* count = app.add_subcommand("count", "Print ns (or nr with --rooted) of a tree");
  std::string count_input = "-";
  std::string count_format = "edgelist";
  bool count_rooted = false;
  bool count_total = false;
  std::optional<int> count_root;
  count->add_option("input", count_input, "Tree file, or - for stdin")->capture_default_str();
  count->add_option("--format", count_format, "Input format")->check(CLI::IsMember({"edgelist", "levelseq"}));
  count->add_flag("--rooted", count_rooted, "Count root-containing classes (nr)");
  count->add_option("--root", count_root, "Root vertex (default 0)");
  count->add_flag("--total", count_total, "Also print the number of subtrees");

  // search
  auto* search = app.add_subcommand("search", "Compute S_n or R_n with all witnesses");
  std::string search_kind = "S";
  std::optional<int> search_n;
  int search_max_n = 10;
  bool search_csv = false;
  search->add_option("--kind", search_kind, "S (free trees) or R (rooted trees)")->check(CLI::IsMember({"S", "R"}));
  search->add_option("--n", search_n, "Single order");
  search->add_option("--max-n", search_max_n, "Orders 1..max-n when --n is absent")->capture_default_str();
  search->add_flag("--csv", search_csv, "CSV output");

  // table
  auto* table = app.add_subcommand("table", "Extremal table with the bound chain");
  int table_max_n = 10;
  bool table_csv = false;
  table->add_option("--max-n", table_max_n, "Largest order")->capture_default_str();
  table->add_flag("--csv", table_csv, "CSV output");

  // construct
  auto* construct = app.add_subcommand("construct", "Build the lower-bound tree C_n");
  int construct_n = 16;
  std::string construct_emit = "edgelist";
  construct->add_option("--n", construct_n, "Order (>= 8)")->capture_default_str();
  construct->add_option("--emit", construct_emit, "Output format")->check(CLI::IsMember({"edgelist", "dot"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run finite checks; exit 0 iff all pass");
  std::string check_name = "all";
  std::optional<int> verify_max_n;
  bool verify_csv = false;
  verify->add_option("check", check_name, "lemma, aux, cases576, case2, centroid, construction, exceptional, all")
      ->capture_default_str();
  verify->add_option("--max-n", verify_max_n, "Override the check's default range");
  verify->add_flag("--csv", verify_csv, "CSV output");

  // export
  auto* exporter = app.add_subcommand("export", "Convert a tree between formats");
  std::string export_input = "-";
  std::string export_format = "edgelist";
  std::string export_emit = "dot";
  std::optional<int> export_root;
  exporter->add_option("input", export_input, "Tree file, or - for stdin")->capture_default_str();
  exporter->add_option("--format", export_format, "Input format")->check(CLI::IsMember({"edgelist", "levelseq"}));
  exporter->add_option("--emit", export_emit, "Output format")
      ->check(CLI::IsMember({"edgelist", "levelseq", "dot"}));
  exporter->add_option("--root", export_root, "Root vertex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto opts = common.options();

    if (*count) {
      auto tree = si::parse_tree(read_input(count_input), si::tree_format_from_string(count_format));
      if (count_root) tree = tree.with_root(*count_root);
      std::ostringstream os;
      if (count_rooted) {
        if (!tree.rooted()) tree = tree.with_root(0);
        os << "nr=" << si::nr(tree, opts.limits.set_cap) << '\n';
      } else {
        os << "ns=" << si::ns(tree) << '\n';
      }
      if (count_total) os << "total=" << si::count_subtrees_total(tree) << '\n';
      emit(common, os.str());
      return kExitOk;
    }

    if (*search) {
      const auto kind = search_kind == "S" ? si::ExtremalKind::S : si::ExtremalKind::R;
      const int lo = search_n.value_or(1);
      const int hi = search_n.value_or(search_max_n);
      std::ostringstream os;
      if (search_csv) os << si::search_csv_header(kind);
      for (int n = lo; n <= hi; ++n) {
        const auto rec = kind == si::ExtremalKind::S ? si::compute_S(n, opts) : si::compute_R(n, opts);
        if (search_csv) {
          os << si::search_csv_row(rec);
          continue;
        }
        os << search_kind << "_" << n << " = " << rec.value << " (" << rec.witnesses.size() << " witnesses)\n";
        for (const auto& w : rec.witnesses)
          os << "  " << si::level_sequence_string(w.rooted() ? w : si::centroid_canonical_rooting(w)) << '\n';
      }
      emit(common, os.str());
      return kExitOk;
    }

    if (*table) {
      const auto rows = si::extremal_table(table_max_n, opts);
      emit(common, table_csv ? si::table_csv(rows) : si::table_text(rows));
      bool ok = true;
      for (const auto& r : rows) ok = ok && r.chain_ok();
      return ok ? kExitOk : kExitFailed;
    }

    if (*construct) {
      const auto c = si::build_construction(construct_n);
      if (construct_emit == "dot") {
        si::DotStyle style;
        style.graph_name = "C_" + std::to_string(construct_n);
        style.labels = c.names();
        emit(common, si::to_dot(c.tree, style));
      } else {
        emit(common, si::serialize_tree(c.tree, si::TreeFormat::edgelist));
      }
      return kExitOk;
    }

    if (*verify) {
      const auto reports = si::run_verification(check_name, verify_max_n, opts);
      std::string text;
      if (verify_csv) {
        text = si::reports_csv(reports);
      } else {
        for (const auto& r : reports) text += si::to_text(r);
      }
      emit(common, text);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.passed();
      return ok ? kExitOk : kExitFailed;
    }

    if (*exporter) {
      auto tree = si::parse_tree(read_input(export_input), si::tree_format_from_string(export_format));
      if (export_root) tree = tree.with_root(*export_root);
      emit(common, si::serialize_tree(tree, si::tree_format_from_string(export_emit)));
      return kExitOk;
    }
  } catch (const si::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const si::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
