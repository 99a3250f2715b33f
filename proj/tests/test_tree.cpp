#include "oracles.hpp"

#include "weaktree/errors.hpp"
#include "weaktree/tree.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace weaktree;

TEST_CASE("parse and serialize small trees") {
  CHECK(parse_tree("()").size() == 1);
  CHECK(serialize_tree(parse_tree("(()()())")) == "(()()())");
  // Children are reordered into descending code order.
  CHECK(parse_tree("((()())())").code() == "(()(()()))");
  CHECK(parse_tree("(()(()()))") == parse_tree("((()())())"));
  CHECK(RootedTree::chain(3).code() == "((()))");
  CHECK(RootedTree::single_vertex().code() == "()");
}

TEST_CASE("malformed codes are rejected with offsets") {
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_tree("("), ParseError);
  CHECK_THROWS_AS(parse_tree(")"), ParseError);
  CHECK_THROWS_AS(parse_tree("()()"), ParseError);
  CHECK_THROWS_AS(parse_tree("(x)"), ParseError);
  try {
    parse_tree("(()x)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("parent arrays are validated") {
  const std::size_t none = RootedTree::npos;
  std::vector<std::size_t> two_roots{none, none};
  CHECK_THROWS_AS(RootedTree::from_parents(two_roots), InputError);
  std::vector<std::size_t> cycle{none, 2, 1};
  CHECK_THROWS_AS(RootedTree::from_parents(cycle), InputError);
  std::vector<std::size_t> empty;
  CHECK_THROWS(RootedTree::from_parents(empty));
}

TEST_CASE("enumeration sizes match the counting recurrence") {
  const auto counts = oracle::rooted_tree_counts(10);
  const std::vector<std::uint64_t> known{0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  CHECK(counts == known);
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto codes = enumerate_rooted_trees(n);
    CHECK(codes.size() == counts[n]);
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK(std::set<std::string>(codes.begin(), codes.end()).size() == codes.size());
    for (const auto& c : codes) {
      const RootedTree t = parse_tree(c);
      CHECK(t.code() == c);
      CHECK(t.size() == n);
    }
  }
  CHECK_THROWS_AS(enumerate_rooted_trees(0), InputError);
  CHECK_THROWS_AS(enumerate_rooted_trees(13), CapacityError);
}

TEST_CASE("measures agree with naive recomputation") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& c : enumerate_rooted_trees(n)) {
      const RootedTree t = parse_tree(c);
      const auto m = oracle::measure(oracle::parents_of_code(c));
      CHECK(t.size() == m.size);
      CHECK(t.height() == m.height);
      CHECK(t.leaf_count() == m.leaves);
      CHECK(leaf_count(t) == m.leaves);
    }
  }
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto parents = oracle::random_parents(n, rng);
    const RootedTree t = RootedTree::from_parents(parents);
    for (int k = 0; k < 3; ++k) {
      const auto again = oracle::relabel(parents, rng);
      CHECK(RootedTree::from_parents(again).code() == t.code());
    }
    CHECK(parse_tree(serialize_tree(t)) == t);
    CHECK(parse_tree(serialize_tree(t)).size() == t.size());
  }
}

TEST_CASE("ancestor and lca queries match root-path walks") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const RootedTree t = RootedTree::from_parents(oracle::random_parents(2 + trial % 11, rng));
    for (std::size_t u = 0; u < t.size(); ++u) {
      for (std::size_t v = 0; v < t.size(); ++v) {
        const auto path = oracle::root_path(t, v);
        CHECK(t.is_ancestor(u, v) == (std::find(path.begin(), path.end(), u) != path.end()));
        CHECK(lca(t, VertexId{u}, VertexId{v}).index == oracle::naive_lca(t, u, v));
      }
    }
  }
  CHECK_THROWS_AS(lca(parse_tree("(())"), VertexId{0}, VertexId{2}), InputError);
}

TEST_CASE("root children and from_children are inverse") {
  const RootedTree t = parse_tree("((())()(()()))");
  CHECK(RootedTree::from_children(t.root_children()) == t);
  CHECK(t.root_children().size() == 3);
}

TEST_CASE("dot export draws one edge per non-root vertex") {
  const RootedTree t = parse_tree("(()(()()))");
  const std::string dot = to_dot(t);
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  CHECK(edges == t.size() - 1);
  CHECK(dot.find("fillcolor=black") != std::string::npos);
}
