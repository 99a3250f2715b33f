#include "weaktree/construction.hpp"
#include "weaktree/embedding.hpp"
#include "weaktree/errors.hpp"
#include "weaktree/verifier.hpp"

#include <doctest.h>

#include <set>

using namespace weaktree;

namespace {

std::vector<RootedTree> materialize(const SequenceDescription& seq, std::size_t count) {
  std::vector<RootedTree> out;
  for_each_tree(seq, 1, count, [&](const ExtendedCount&, const TreeDescriptor& d) { out.push_back(expand(d)); });
  return out;
}

std::vector<TreeDescriptor> prefix_trees() {
  std::vector<TreeDescriptor> out;
  for (const auto& [label, d] : initial_segment()) out.push_back(d);
  return out;
}

std::set<std::pair<ExtendedCount, ExtendedCount>> pairs_of(const VerificationReport& r) {
  std::set<std::pair<ExtendedCount, ExtendedCount>> out;
  for (const auto& v : r.embedding_violations) out.emplace(v.earlier, v.later);
  return out;
}

}  // namespace

TEST_CASE("explicit check of the opening trees") {
  const auto trees = materialize(build_full_sequence(), 30);
  const auto report = verify_explicit_sequence(trees, 3);
  CHECK(report.verdict == Verdict::Valid);
  CHECK(report.mode == VerificationMode::Explicit);
  CHECK(report.checked_pairs == 435);
  CHECK(report.budget_violations.empty());
  CHECK(report.embedding_violations.empty());
}

TEST_CASE("star and leaf-plus-cherry pass both routes") {
  const std::vector<RootedTree> trees{parse_tree("(()()())"), parse_tree("(()(()()))")};
  CHECK(verify_explicit_sequence(trees, 3).verdict == Verdict::Valid);
  CHECK_FALSE(family_embeds(TreeDescriptor::explicit_tree(trees[0]), TreeDescriptor::explicit_tree(trees[1])));
}

TEST_CASE("violations carry replayable witnesses") {
  const std::vector<RootedTree> trees{parse_tree("(()())"), parse_tree("((()))"), parse_tree("(()(()))"),
                                      parse_tree("(()()()()()())")};
  const auto report = verify_explicit_sequence(trees, 2);
  CHECK(report.verdict == Verdict::Invalid);
  REQUIRE(report.budget_violations.size() == 1);
  CHECK(report.budget_violations[0].position == 4);
  CHECK(report.budget_violations[0].size == 7);
  CHECK(report.budget_violations[0].budget == 6);
  CHECK(pairs_of(report) == std::set<std::pair<ExtendedCount, ExtendedCount>>{{1, 3}, {1, 4}, {2, 3}});
  for (const auto& v : report.embedding_violations) {
    REQUIRE(v.witness.has_value());
    const auto& a = trees[v.earlier.convert_to<std::size_t>() - 1];
    const auto& b = trees[v.later.convert_to<std::size_t>() - 1];
    CHECK(check_witness(a, b, *v.witness).ok());
  }
}

TEST_CASE("prefix reports are restrictions of the full report") {
  std::vector<RootedTree> trees;
  for (const char* c : {"((()))", "(()())", "((()()))", "(()(()))", "(())", "((())())", "()", "(()()())"}) {
    trees.push_back(parse_tree(c));
  }
  const auto full = verify_explicit_sequence(trees, 4);
  const auto all = pairs_of(full);
  for (std::size_t k = 1; k <= trees.size(); ++k) {
    const auto part = verify_explicit_sequence(std::span(trees).first(k), 4);
    std::set<std::pair<ExtendedCount, ExtendedCount>> restricted;
    for (const auto& p : all) {
      if (p.second <= k) restricted.insert(p);
    }
    CHECK(pairs_of(part) == restricted);
  }
}

TEST_CASE("thread count does not change the report") {
  const auto trees = materialize(build_full_sequence(), 60);
  std::vector<RootedTree> shuffled(trees.rbegin(), trees.rend());
  const auto one = verify_explicit_sequence(shuffled, 3, {1});
  CHECK(one.verdict == Verdict::Invalid);
  CHECK(verify_explicit_sequence(shuffled, 3, {4}) == one);
  CHECK(verify_explicit_sequence(shuffled, 3, {7}) == one);
}

TEST_CASE("symbolic audit of the full construction") {
  const SequenceDescription seq = build_full_sequence();
  const auto report = verify_phases(seq);
  CHECK(report.mode == VerificationMode::Symbolic);
  CHECK(report.verdict == Verdict::Valid);
  CHECK(report.pair_classes.size() == 10);
  for (const auto& c : report.pair_classes) CHECK(c.outcome == ClassOutcome::Clean);
  const ExtendedCount n = seq.total_length;
  CHECK(report.checked_pairs == n * (n - 1) / 2);
  CHECK(report.budget_violations.empty());
}

TEST_CASE("symbolic audit finds a restarted leg run") {
  // Rounds of the first run restart at (4, 4): the tree just before the split
  // reappears right after it.
  const LegSimState restart{17, 2, 4, 4};
  const auto rest = simulate_leg_elimination(restart);
  const auto seq = make_sequence({explicit_phase(prefix_trees()), leg_phase({12, 2, 5, 5}, false, 4),
                                  leg_phase(restart, true, rest.steps + 1)});
  const auto report = verify_phases(seq);
  CHECK(report.verdict == Verdict::Invalid);
  REQUIRE_FALSE(report.embedding_violations.empty());
  CHECK(report.embedding_violations[0].earlier == 13);
  CHECK(report.embedding_violations[0].later == 14);
  bool named = false;
  for (const auto& c : report.pair_classes) {
    if (c.outcome == ClassOutcome::Violated) {
      CHECK(c.earlier_phase == 1);
      CHECK(c.later_phase == 2);
      named = true;
    }
  }
  CHECK(named);

  // The explicit checker agrees on the materialized prefix.
  const auto trees = materialize(seq, 20);
  const auto explicit_report = verify_explicit_sequence(trees, 3);
  CHECK(pairs_of(explicit_report).count({13, 14}) == 1);
}

TEST_CASE("symbolic audit reports budget overruns") {
  auto trees = prefix_trees();
  trees[2] = TreeDescriptor::two_leg(4, 2, 1);
  const auto report = verify_phases(make_sequence({explicit_phase(trees)}));
  CHECK(report.verdict == Verdict::Invalid);
  REQUIRE(report.budget_violations.size() == 1);
  CHECK(report.budget_violations[0].position == 3);
}

TEST_CASE("broken tiling leaves the audit inconclusive") {
  SequenceDescription seq = build_full_sequence();
  seq.phases[1].start_position += 1;
  const auto report = verify_phases(seq);
  CHECK(report.verdict == Verdict::Inconclusive);
  CHECK(report.pair_classes.front().name == "phase-tiling");
}

TEST_CASE("cross validation on small trees") {
  const auto report = cross_validate(build_full_sequence(), 30);
  CHECK(report.mode == VerificationMode::Mixed);
  CHECK(report.verdict == Verdict::Valid);
  CHECK(report.disagreements.empty());
  CHECK(report.checked_pairs > 0);
}

TEST_CASE("enum names") {
  CHECK(to_string(Verdict::Inconclusive) == "inconclusive");
  CHECK(to_string(VerificationMode::Mixed) == "mixed");
  CHECK(to_string(ClassOutcome::Unresolved) == "unresolved");
}
