#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "canonical.hpp"
#include "tree.hpp"

namespace subtree_iso {

enum class TreeFormat { edgelist, levelseq, dot };

inline std::string_view to_string(TreeFormat f) {
  switch (f) {
    case TreeFormat::edgelist: return "edgelist";
    case TreeFormat::levelseq: return "levelseq";
    case TreeFormat::dot: return "dot";
  }
  return "?";
}

inline TreeFormat tree_format_from_string(std::string_view s) {
  if (s == "edgelist") return TreeFormat::edgelist;
  if (s == "levelseq") return TreeFormat::levelseq;
  if (s == "dot") return TreeFormat::dot;
  throw ParseError("unknown tree format '" + std::string(s) + "'");
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long parse_int(std::string_view token, std::size_t line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                     "' is not a decimal integer");
  return value;
}

/// Strips '#' comments and splits into (line number, tokens) for nonblank lines.
inline std::vector<std::pair<std::size_t, std::vector<std::string_view>>> tokenize_lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
    pos = end + 1;
  }
  return out;
}

inline LabeledTree parse_edgelist(std::string_view text) {
  auto lines = tokenize_lines(text);
  std::optional<std::size_t> declared;
  std::size_t first = 0;
  if (!lines.empty() && lines[0].second.size() == 1) {
    const long n = parse_int(lines[0].second[0], lines[0].first);
    if (n <= 0) throw ParseError("line " + std::to_string(lines[0].first) + ": order must be positive");
    declared = static_cast<std::size_t>(n);
    first = 1;
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  long max_vertex = -1;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& [line_no, tokens] = lines[i];
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v', got " +
                       std::to_string(tokens.size()) + " fields");
    const long u = parse_int(tokens[0], line_no);
    const long v = parse_int(tokens[1], line_no);
    if (u < 0 || v < 0) throw ParseError("line " + std::to_string(line_no) + ": negative vertex index");
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self loop");
    const Edge key = u < v ? Edge(u, v) : Edge(v, u);
    if (!seen.insert(key).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                       std::to_string(u) + " " + std::to_string(v));
    max_vertex = std::max({max_vertex, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!declared && edges.empty()) throw ParseError("empty edge list without an order header");
  const std::size_t n = declared ? *declared : static_cast<std::size_t>(max_vertex + 1);
  if (max_vertex >= static_cast<long>(n))
    throw ParseError("vertex " + std::to_string(max_vertex) + " exceeds declared order " +
                     std::to_string(n));
  try {
    return LabeledTree::from_edges(n, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline LabeledTree parse_levelseq(std::string_view text) {
  auto lines = tokenize_lines(text);
  if (lines.size() != 1) throw ParseError("level sequence must be a single nonblank line");
  std::vector<int> levels;
  for (auto tok : lines[0].second) levels.push_back(static_cast<int>(parse_int(tok, lines[0].first)));
  try {
    return LabeledTree::from_level_sequence(levels);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline std::vector<int> level_sequence_from(const LabeledTree& t, Vertex v, Vertex parent, int depth) {
  std::vector<std::vector<int>> parts;
  for (Vertex w : t.neighbors(v))
    if (w != parent) parts.push_back(level_sequence_from(t, w, v, depth + 1));
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  std::vector<int> out{depth};
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace detail

/// The canonical (lexicographically largest) level sequence of a rooted tree.
inline std::vector<int> canonical_level_sequence(const LabeledTree& tree) {
  return detail::level_sequence_from(tree, tree.require_root(), -1, 1);
}

inline std::string level_sequence_string(const LabeledTree& tree) {
  std::string out;
  for (int l : canonical_level_sequence(tree)) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(l);
  }
  return out;
}

inline LabeledTree parse_tree(std::string_view text, TreeFormat format) {
  switch (format) {
    case TreeFormat::edgelist: return detail::parse_edgelist(text);
    case TreeFormat::levelseq: return detail::parse_levelseq(text);
    case TreeFormat::dot: break;
  }
  throw ParseError("dot is an output-only format");
}

struct DotStyle {
  std::string graph_name = "T";
  std::map<Vertex, std::string> labels;  // optional display names
};

inline std::string to_dot(const LabeledTree& tree, const DotStyle& style = {}) {
  std::ostringstream os;
  os << "graph " << style.graph_name << " {\n";
  os << "  node [shape=circle, width=0.2, label=\"\"];\n";
  for (Vertex v = 0; v < static_cast<Vertex>(tree.order()); ++v) {
    os << "  " << v;
    std::vector<std::string> attrs;
    if (auto it = style.labels.find(v); it != style.labels.end())
      attrs.push_back("xlabel=\"" + it->second + "\"");
    if (tree.root() == v) attrs.push_back("shape=box");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  for (auto [u, v] : tree.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

/// Serializes a tree. The edge list starts with an order header line; the
/// level sequence is canonical and requires a rooted tree.
inline std::string serialize_tree(const LabeledTree& tree, TreeFormat format) {
  switch (format) {
    case TreeFormat::edgelist: {
      std::string out = std::to_string(tree.order()) + "\n";
      for (auto [u, v] : tree.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
      return out;
    }
    case TreeFormat::levelseq:
      if (!tree.rooted()) throw InvalidArgument("level sequence output requires a rooted tree");
      return level_sequence_string(tree) + "\n";
    case TreeFormat::dot: return to_dot(tree);
  }
  return {};
}

}  // namespace subtree_iso
