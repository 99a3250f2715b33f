#include "oracles.hpp"

#include "weaktree/embedding.hpp"
#include "weaktree/errors.hpp"
#include "weaktree/tree.hpp"

#include <doctest.h>

#include <random>

using namespace weaktree;

namespace {

std::vector<RootedTree> all_trees_up_to(std::size_t n) {
  std::vector<RootedTree> out;
  for (std::size_t s = 1; s <= n; ++s) {
    for (const auto& c : enumerate_rooted_trees(s)) out.push_back(parse_tree(c));
  }
  return out;
}

}  // namespace

TEST_CASE("small hand-checked cases") {
  const RootedTree star = parse_tree("(()()())");
  const RootedTree t2 = parse_tree("(()(()()))");
  CHECK_FALSE(inf_embeds(star, t2));
  CHECK(inf_embeds(parse_tree("()"), star));
  CHECK(inf_embeds(parse_tree("(()())"), t2));
  // A chain of 3 fits along the cherry branch.
  CHECK(inf_embeds(RootedTree::chain(3), t2));
  CHECK_FALSE(inf_embeds(RootedTree::chain(4), t2));
  // Two leaves meeting at the root cannot be sent to two leaves of a chain.
  CHECK_FALSE(inf_embeds(parse_tree("(()())"), RootedTree::chain(5)));
  // Infimum preservation is stronger than topological minors: the cherry's
  // root must land on the branching vertex, not above it.
  CHECK(inf_embeds(parse_tree("(()())"), parse_tree("((()()))")));
  CHECK_FALSE(inf_embeds(parse_tree("((())())"), parse_tree("((()()))")));
}

TEST_CASE("three-leaf star against root with leaf and cherry") {
  const RootedTree t1 = parse_tree("(()()())");
  const RootedTree t2 = parse_tree("(()(()()))");
  CHECK_FALSE(inf_embeds(t1, t2));
  CHECK_FALSE(inf_embeds_witness(t1, t2).has_value());
  CHECK_FALSE(brute_force_inf_embeds(t1, t2));
  // Leaf-count route: both have three leaves, so it does not exclude the pair,
  // while the reverse direction is excluded by size.
  CHECK(t1.leaf_count() == t2.leaf_count());
  CHECK_FALSE(inf_embeds(t2, t1));

  // In canonical preorder t2 is r'=0, y=1, x=2, p=3, q=4.
  InfEmbeddingChecker checker;
  const RootedTree cherry = parse_tree("(()())");
  const auto at_x = checker.witness_at(cherry, t2, VertexId{2});
  REQUIRE(at_x.has_value());
  CHECK(check_witness(cherry, t2, *at_x).ok());
  CHECK(at_x->mapping[0].second.index == 2);
  CHECK_FALSE(checker.witness_at(cherry, t2, VertexId{1}).has_value());
  // The star's root has no valid image at all.
  for (std::size_t v = 0; v < t2.size(); ++v) CHECK_FALSE(checker.witness_at(t1, t2, VertexId{v}).has_value());
}

TEST_CASE("dynamic program matches the brute-force oracle up to 6 vertices") {
  const auto trees = all_trees_up_to(6);
  InfEmbeddingChecker checker;
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      const bool fast = checker.embeds(a, b);
      CHECK_MESSAGE(fast == brute_force_inf_embeds(a, b), a.code() << " -> " << b.code());
      if (fast) {
        CHECK(a.size() <= b.size());
        CHECK(a.height() <= b.height());
        CHECK(a.leaf_count() <= b.leaf_count());
        const auto w = checker.witness(a, b);
        REQUIRE(w.has_value());
        CHECK(check_witness(a, b, *w).ok());
      }
    }
  }
}

TEST_CASE("reflexive on all trees up to 8 vertices") {
  for (const auto& t : all_trees_up_to(8)) CHECK(inf_embeds(t, t));
}

TEST_CASE("transitive on all triples up to 6 vertices") {
  const auto trees = all_trees_up_to(6);
  std::vector<std::vector<bool>> rel(trees.size(), std::vector<bool>(trees.size()));
  InfEmbeddingChecker checker;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = 0; j < trees.size(); ++j) rel[i][j] = checker.embeds(trees[i], trees[j]);
  }
  std::size_t failures = 0;
  for (std::size_t a = 0; a < trees.size(); ++a) {
    for (std::size_t b = 0; b < trees.size(); ++b) {
      if (!rel[a][b]) continue;
      for (std::size_t c = 0; c < trees.size(); ++c) {
        if (rel[b][c] && !rel[a][c]) ++failures;
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("adding a leaf keeps the old tree embedded") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto parents = oracle::random_parents(1 + trial % 14, rng);
    const RootedTree before = RootedTree::from_parents(parents);
    parents.push_back(std::uniform_int_distribution<std::size_t>(0, parents.size() - 1)(rng));
    const RootedTree after = RootedTree::from_parents(parents);
    CHECK(inf_embeds(before, after));
    const auto w = inf_embeds_witness(before, after);
    REQUIRE(w.has_value());
    CHECK(check_witness(before, after, *w).ok());
  }
}

TEST_CASE("isomorphic copies give the same answers") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pa = oracle::random_parents(1 + trial % 7, rng);
    const auto pb = oracle::random_parents(1 + (trial * 3) % 9, rng);
    const bool expected = brute_force_inf_embeds(RootedTree::from_parents(pa), RootedTree::from_parents(pb));
    CHECK(inf_embeds(RootedTree::from_parents(oracle::relabel(pa, rng)),
                     RootedTree::from_parents(oracle::relabel(pb, rng))) == expected);
  }
}

TEST_CASE("witness replay catches broken mappings") {
  const RootedTree cherry = parse_tree("(()())");
  const RootedTree t2 = parse_tree("(()(()()))");
  EmbeddingWitness good{{{VertexId{0}, VertexId{2}}, {VertexId{1}, VertexId{3}}, {VertexId{2}, VertexId{4}}}};
  CHECK(check_witness(cherry, t2, good).ok());

  EmbeddingWitness wrong_infimum{{{VertexId{0}, VertexId{0}}, {VertexId{1}, VertexId{3}}, {VertexId{2}, VertexId{4}}}};
  const auto c1 = check_witness(cherry, t2, wrong_infimum);
  CHECK(c1.descendant_preserving);
  CHECK_FALSE(c1.infimum_preserving);
  CHECK_FALSE(c1.ok());

  EmbeddingWitness collision{{{VertexId{0}, VertexId{2}}, {VertexId{1}, VertexId{3}}, {VertexId{2}, VertexId{3}}}};
  CHECK_FALSE(check_witness(cherry, t2, collision).injective);

  EmbeddingWitness partial{{{VertexId{0}, VertexId{2}}, {VertexId{1}, VertexId{3}}}};
  CHECK_FALSE(check_witness(cherry, t2, partial).total);

  EmbeddingWitness upward{{{VertexId{0}, VertexId{3}}, {VertexId{1}, VertexId{2}}, {VertexId{2}, VertexId{4}}}};
  CHECK_FALSE(check_witness(cherry, t2, upward).descendant_preserving);
}

TEST_CASE("brute force refuses oversized inputs") {
  CHECK_THROWS_AS(brute_force_inf_embeds(RootedTree::chain(9), RootedTree::chain(9)), CapacityError);
  CHECK_THROWS_AS(brute_force_inf_embeds(RootedTree::chain(2), RootedTree::chain(10)), CapacityError);
}

TEST_CASE("witness prefers the smallest target vertex") {
  const auto w = inf_embeds_witness(parse_tree("()"), parse_tree("(()())"));
  REQUIRE(w.has_value());
  CHECK(w->mapping.size() == 1);
  CHECK(w->mapping[0].second.index == 0);
}
