#include "weaktree/errors.hpp"
#include "weaktree/search.hpp"
#include "weaktree/verifier.hpp"

#include <doctest.h>

using namespace weaktree;

namespace {

Verdict reverify(const SearchResult& r) {
  std::vector<RootedTree> trees;
  for (const auto& c : r.witness) trees.push_back(parse_tree(c));
  return verify_explicit_sequence(trees, r.n).verdict;
}

}  // namespace

TEST_CASE("exact small values") {
  const auto r0 = longest_bad_sequence(0, 50, default_size_cap(0));
  CHECK(r0.length == 1);
  CHECK(r0.exhausted);

  const auto r1 = longest_bad_sequence(1, 50, default_size_cap(1));
  CHECK(r1.length == 2);
  CHECK(r1.exhausted);
  CHECK(r1.witness == std::vector<std::string>{"(())", "()"});

  const auto r2 = longest_bad_sequence(2, 50, 7);
  CHECK(r2.length == 5);
  CHECK(r2.exhausted);
  CHECK(r2.size_cap == 7);
  CHECK(r2.witness == std::vector<std::string>{"((()))", "(()()())", "(()())", "(())", "()"});
  for (const auto& r : {r0, r1, r2}) {
    CHECK(r.witness.size() == r.length);
    CHECK(reverify(r) == Verdict::Valid);
    CHECK(r.cuts.empty());
  }
}

TEST_CASE("n = 2 does not depend on the size cap once it is large enough") {
  for (std::size_t cap = 5; cap <= 9; ++cap) {
    const auto r = longest_bad_sequence(2, 50, cap);
    CHECK(r.length == 5);
    CHECK(r.exhausted);
  }
  // Too small a cap is reported, not hidden.
  const auto tight = longest_bad_sequence(2, 50, 3);
  CHECK_FALSE(tight.exhausted);
  CHECK(std::find(tight.cuts.begin(), tight.cuts.end(), "size_cap") != tight.cuts.end());
}

TEST_CASE("step cap cuts are reported") {
  const auto r = longest_bad_sequence(2, 3, 7);
  CHECK(r.length == 3);
  CHECK_FALSE(r.exhausted);
  CHECK(r.cuts == std::vector<std::string>{"step_cap"});
}

TEST_CASE("monotone in the caps") {
  std::size_t prev = 0;
  for (std::size_t step = 1; step <= 6; ++step) {
    const auto r = longest_bad_sequence(2, step, 7);
    CHECK(r.length >= prev);
    prev = r.length;
  }
  prev = 0;
  for (std::size_t size = 1; size <= 8; ++size) {
    const auto r = longest_bad_sequence(2, 10, size);
    CHECK(r.length >= prev);
    prev = r.length;
  }
}

TEST_CASE("n = 3 reaches the explicit prefix length") {
  const auto r = longest_bad_sequence(3, 12, 12, 200'000);
  CHECK(r.length >= 9);
  CHECK_FALSE(r.exhausted);
  CHECK(reverify(r) == Verdict::Valid);
  CHECK(longest_bad_sequence(3, 12, 12, 200'000) == r);
}

TEST_CASE("search arguments are validated") {
  CHECK_THROWS_AS(longest_bad_sequence(2, 0, 7), InputError);
  CHECK_THROWS_AS(longest_bad_sequence(4, 5, 7), InputError);
  CHECK_THROWS_AS(longest_bad_sequence(2, 5, 13), CapacityError);
  CHECK_THROWS_AS(longest_bad_sequence(2, 5, 7, 0), InputError);
}
