#include "weaktree/errors.hpp"
#include "weaktree/serialize.hpp"

#include <doctest.h>

using namespace weaktree;
using nlohmann::json;

namespace {

template <typename T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).template get<T>();
}

}  // namespace

TEST_CASE("exact integers travel as strings") {
  const ExtendedCount big("844424930131960");
  const json j = big;
  CHECK(j.is_string());
  CHECK(round_trip(big) == big);
}

TEST_CASE("reports round-trip") {
  const std::vector<RootedTree> trees{parse_tree("(()())"), parse_tree("(()(()))"), parse_tree("(()()()()())")};
  const auto explicit_report = verify_explicit_sequence(trees, 1);
  REQUIRE_FALSE(explicit_report.embedding_violations.empty());
  REQUIRE_FALSE(explicit_report.budget_violations.empty());
  CHECK(round_trip(explicit_report) == explicit_report);

  const auto symbolic = verify_phases(build_full_sequence());
  CHECK(round_trip(symbolic) == symbolic);
  const json j = symbolic;
  for (const char* key : {"checked_pairs", "budget_violations", "embedding_violations", "mode", "verdict",
                          "pair_classes", "disagreements"}) {
    CHECK(j.contains(key));
  }

  VerificationReport mixed;
  mixed.mode = VerificationMode::Mixed;
  mixed.verdict = Verdict::Inconclusive;
  mixed.checked_pairs = 3;
  mixed.disagreements.push_back({1, 2, true, false});
  mixed.pair_classes.push_back({0, 1, "a", "b", 7, ClassOutcome::Unresolved, "c"});
  CHECK(round_trip(mixed) == mixed);
}

TEST_CASE("other records round-trip") {
  const auto search = longest_bad_sequence(2, 50, 7);
  CHECK(round_trip(search) == search);

  const SequenceRecord rec{92, 95, TreeDescriptor::two_leg(1, 47, 47)};
  CHECK(round_trip(rec) == rec);
  CHECK(json(rec).dump() == R"({"descriptor":"twoleg:1:47:47","label":"95","position":"92"})");

  const auto sim = simulate_leg_elimination({10, 0, 5, 5});
  const auto back = round_trip(sim);
  CHECK(back.steps == sim.steps);
  REQUIRE(back.rows.size() == sim.rows.size());
  for (std::size_t i = 0; i < sim.rows.size(); ++i) {
    CHECK(back.rows[i].kind == sim.rows[i].kind);
    CHECK(back.rows[i].state == sim.rows[i].state);
  }

  const auto bound = derive_bound();
  CHECK(round_trip(bound).bound == bound.bound);
  CHECK(round_trip(bound).restart_steps == bound.restart_steps);

  const EmbedAnswer answer{"explicit:(()())", "explicit:(()(()()))", true,
                           inf_embeds_witness(parse_tree("(()())"), parse_tree("(()(()()))"))};
  CHECK(round_trip(answer) == answer);
  const EmbedAnswer none{"a", "b", false, std::nullopt};
  CHECK(round_trip(none) == none);
}

TEST_CASE("bad enum text is a parse error") {
  CHECK_THROWS_AS(parse_verdict("maybe"), ParseError);
  CHECK(parse_class_outcome("violated") == ClassOutcome::Violated);
  CHECK(parse_leg_row_kind("symmetric") == LegRowKind::Symmetric);
}
