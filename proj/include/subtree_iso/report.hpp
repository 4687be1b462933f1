#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace subtree_iso {

struct Counterexample {
  std::string tree;    // level sequence or edge list
  std::string detail;  // the failed comparison
};

/// Outcome of one finite check: how many items were examined, which failed,
/// and free-form per-item notes (values, partitions) for the log.
struct VerificationReport {
  std::string check;
  std::string range;
  std::size_t checked = 0;
  std::size_t expected = 0;  // 0 when the check has no fixed item count
  std::vector<Counterexample> failures;
  std::vector<std::string> notes;

  bool passed() const noexcept { return failures.empty() && (expected == 0 || checked == expected); }

  void fail(std::string tree, std::string detail) { failures.push_back({std::move(tree), std::move(detail)}); }
};

inline VerificationReport make_report(std::string check, std::string range) {
  VerificationReport r;
  r.check = std::move(check);
  r.range = std::move(range);
  return r;
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.check;
  if (!r.range.empty()) os << " (" << r.range << ")";
  os << ": " << r.checked << "/" << (r.expected ? r.expected : r.checked) << " checked, "
     << r.failures.size() << " violations\n";
  for (const auto& note : r.notes) os << "    " << note << '\n';
  for (const auto& f : r.failures) os << "    counterexample: " << f.tree << " -- " << f.detail << '\n';
  return os.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string reports_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "check,range,verdict,checked,violations,counterexamples\n";
  for (const auto& r : reports) {
    std::string cex;
    for (const auto& f : r.failures) {
      if (!cex.empty()) cex += ';';
      cex += f.tree;
    }
    os << csv_field(r.check) << ',' << csv_field(r.range) << ',' << (r.passed() ? "pass" : "fail") << ','
       << r.checked << ',' << r.failures.size() << ',' << csv_field(cex) << '\n';
  }
  return os.str();
}

}  // namespace subtree_iso
