#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "oracles.hpp"
#include "subtree_iso/canonical.hpp"
#include "subtree_iso/counting.hpp"
#include "subtree_iso/io.hpp"
#include "subtree_iso/treegen.hpp"

using namespace subtree_iso;

TEST(ParseTree, EdgeListPath) {
  const auto t = parse_tree("0 1\n1 2", TreeFormat::edgelist);
  EXPECT_EQ(t.order(), 3u);
  EXPECT_EQ(free_code(t), free_code(path_tree(3)));
  EXPECT_FALSE(t.rooted());
}

TEST(ParseTree, EdgeListHeaderAndComments) {
  const auto single = parse_tree("1\n", TreeFormat::edgelist);
  EXPECT_EQ(single.order(), 1u);
  const auto t = parse_tree("# a star\n4\n0 1  # spoke\n0 2\n\n0 3\n", TreeFormat::edgelist);
  EXPECT_EQ(free_code(t), free_code(star_tree(4)));
}

TEST(ParseTree, EdgeListErrors) {
  EXPECT_THROW(parse_tree("0 1\n0 1", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("0 1\n1 0", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("0 1 2\n", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("0 x\n", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("0 1\n2 3\n", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("0 1\n1 2\n2 0\n", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("2\n0 2\n", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("0 -1\n", TreeFormat::edgelist), ParseError);
  EXPECT_THROW(parse_tree("3 3\n", TreeFormat::edgelist), ParseError);
}

TEST(ParseTree, LevelSequence) {
  const auto e5 = parse_tree("1 2 3 2", TreeFormat::levelseq);
  EXPECT_EQ(e5.root(), 0);
  EXPECT_EQ(nr(e5), 5u);
  EXPECT_THROW(parse_tree("2 3", TreeFormat::levelseq), ParseError);
  EXPECT_THROW(parse_tree("1 3", TreeFormat::levelseq), ParseError);
  EXPECT_THROW(parse_tree("1 2 1", TreeFormat::levelseq), ParseError);
  EXPECT_THROW(parse_tree("1 2\n2", TreeFormat::levelseq), ParseError);
  EXPECT_THROW(parse_tree("", TreeFormat::levelseq), ParseError);
  EXPECT_THROW(parse_tree("1 2", TreeFormat::dot), ParseError);
}

TEST(SerializeTree, Examples) {
  EXPECT_EQ(serialize_tree(LabeledTree{}, TreeFormat::edgelist), "1\n");
  EXPECT_EQ(serialize_tree(LabeledTree::from_level_sequence(std::vector<int>{1, 2}), TreeFormat::levelseq), "1 2\n");
  EXPECT_THROW(serialize_tree(path_tree(3), TreeFormat::levelseq), InvalidArgument);

  const auto dot = serialize_tree(path_tree(3), TreeFormat::dot);
  const std::regex edge_stmt(R"(\d+ -- \d+;)");
  EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), edge_stmt), std::sregex_iterator()), 2);
  EXPECT_EQ(dot.rfind("graph T {", 0), 0u);
  EXPECT_EQ(dot.back(), '\n');
}

TEST(SerializeTree, LevelSequenceIsCanonicalForm) {
  // the leaf child is listed after the deeper branch regardless of labels
  const auto t = parse_tree("3\n0 2\n0 1\n", TreeFormat::edgelist).with_root(0);
  EXPECT_EQ(serialize_tree(t, TreeFormat::levelseq), "1 2 2\n");
  const auto e5 = parse_tree("0 1\n0 2\n2 3\n", TreeFormat::edgelist).with_root(0);
  EXPECT_EQ(serialize_tree(e5, TreeFormat::levelseq), "1 2 3 2\n");
}

// Output of the generator is already canonical, so serialization reproduces it.
TEST(SerializeTree, MatchesGeneratorLevelSequences) {
  for (int n = 1; n <= 9; ++n) {
    LevelSequenceGenerator gen(n);
    do {
      ASSERT_EQ(canonical_level_sequence(gen.tree()), gen.levels());
    } while (gen.next());
  }
}

TEST(SerializeTree, RoundTripUpToIsomorphism) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 15);
    const auto t = oracle::random_tree(n, rng).with_root(static_cast<Vertex>(rng() % n));
    const auto via_edges = parse_tree(serialize_tree(t, TreeFormat::edgelist), TreeFormat::edgelist);
    EXPECT_EQ(free_code(via_edges), free_code(t));
    const auto via_levels = parse_tree(serialize_tree(t, TreeFormat::levelseq), TreeFormat::levelseq);
    EXPECT_EQ(rooted_code(via_levels), rooted_code(t));
  }
}

TEST(TreeFormat, Names) {
  for (auto f : {TreeFormat::edgelist, TreeFormat::levelseq, TreeFormat::dot})
    EXPECT_EQ(tree_format_from_string(to_string(f)), f);
  EXPECT_THROW(tree_format_from_string("json"), ParseError);
}
