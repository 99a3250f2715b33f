#pragma once

#include "weaktree/construction.hpp"
#include "weaktree/count.hpp"
#include "weaktree/embedding.hpp"
#include "weaktree/tree.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weaktree {

enum class VerificationMode { Explicit, Symbolic, Mixed };
enum class Verdict { Valid, Invalid, Inconclusive };
enum class ClassOutcome { Clean, Violated, Unresolved };

std::string to_string(VerificationMode mode);
std::string to_string(Verdict verdict);
std::string to_string(ClassOutcome outcome);

struct BudgetViolation {
  ExtendedCount position;
  ExtendedCount size;
  ExtendedCount budget;

  friend bool operator==(const BudgetViolation&, const BudgetViolation&) = default;
};

/// An earlier tree that inf-embeds into a later one. Explicit checks carry a
/// witness; symbolic checks name the descriptor pair instead.
struct EmbeddingViolation {
  ExtendedCount earlier;
  ExtendedCount later;
  std::optional<EmbeddingWitness> witness;
  std::string family_pair;

  friend bool operator==(const EmbeddingViolation&, const EmbeddingViolation&) = default;
};

/// Outcome for all pairs (earlier in phase `earlier_phase`, later in phase
/// `later_phase`). Phase indices are equal for pairs inside one phase.
struct PairClassReport {
  std::size_t earlier_phase = 0;
  std::size_t later_phase = 0;
  std::string name;
  std::string rule;
  ExtendedCount pairs;
  ClassOutcome outcome = ClassOutcome::Clean;
  std::string detail;

  friend bool operator==(const PairClassReport&, const PairClassReport&) = default;
};

/// A pair on which the explicit checker and the symbolic route differ.
struct Disagreement {
  ExtendedCount earlier;
  ExtendedCount later;
  bool explicit_embeds = false;
  bool symbolic_embeds = false;

  friend bool operator==(const Disagreement&, const Disagreement&) = default;
};

struct VerificationReport {
  ExtendedCount checked_pairs;
  std::vector<BudgetViolation> budget_violations;
  std::vector<EmbeddingViolation> embedding_violations;
  VerificationMode mode = VerificationMode::Explicit;
  Verdict verdict = Verdict::Valid;
  std::vector<PairClassReport> pair_classes;
  std::vector<Disagreement> disagreements;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Worker threads for pairwise checking; 0 means all hardware threads.
struct ParallelOptions {
  unsigned threads = 0;
};

/// Checks size(T_k) <= k + slack and that no T_i inf-embeds into T_j for
/// i < j. Every violation carries a replayable witness.
VerificationReport verify_explicit_sequence(std::span<const RootedTree> trees, unsigned slack,
                                            ParallelOptions options = {});

/// Family-level audit of a phase description, independent of its length.
///
/// Budgets are checked on the largest member of every round. Pairs inside a
/// leg run are cleared by the round structure (equal minimum leg, shrinking
/// maximum leg; minimum leg strictly decreasing across rounds), chains by
/// strictly decreasing length. Pairs across phases are reduced to the
/// minimal members of the earlier phase against the maximal members of the
/// later one and decided by the closed-form family predicate.
VerificationReport verify_phases(const SequenceDescription& seq);

/// Materializes every position whose tree has at most `limit` vertices,
/// checks those pairs explicitly and compares each verdict with the
/// closed-form route and with the symbolic class outcomes.
VerificationReport cross_validate(const SequenceDescription& seq, std::size_t limit,
                                  ParallelOptions options = {});

}  // namespace weaktree
