#pragma once

#include "weaktree/count.hpp"
#include "weaktree/families.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace weaktree {

/// Budget slack of the tree(3) construction: position k may use k + 3 vertices.
inline constexpr unsigned kSlack = 3;
/// Trees are labelled by their vertex budget, so label = position + 3.
inline constexpr unsigned kLabelOffset = 3;

inline ExtendedCount label_of(const ExtendedCount& position) { return position + kLabelOffset; }

/// One configuration of the leg-elimination process. `stem` may be 0, which
/// models the two bare chains (no root, no stem) used in the hand derivation.
struct LegSimState {
  ExtendedCount label;
  ExtendedCount stem;
  ExtendedCount left;
  ExtendedCount right;

  ExtendedCount size() const { return stem + left + right; }
  friend bool operator==(const LegSimState&, const LegSimState&) = default;
};

enum class LegRowKind { Start, Extension, Symmetric };

struct LegSimRow {
  LegRowKind kind;
  LegSimState state;
};

/// Checkpoint table of a leg-elimination run: the start, then for every
/// round the extension state and the symmetric state that closes it.
struct LegSimulation {
  std::vector<LegSimRow> rows;
  ExtendedCount steps;
};

/// The greedy step rule. From a symmetric state (d, d) the next tree drops
/// the right leg to d - 1 and stretches the left leg to the full budget of
/// the next label; otherwise the left leg shrinks by one.
LegSimState next_leg_state(const LegSimState& state);

/// Runs the greedy rule from a symmetric start until the legs reach
/// (stop_depth, stop_depth). Round lengths are computed in closed form, so
/// the cost is linear in the leg depth, not in the number of steps.
/// Throws InputError unless left == right >= 2, stop_depth < left and the
/// start fits its budget.
LegSimulation simulate_leg_elimination(const LegSimState& initial,
                                       const ExtendedCount& stop_depth = 1);

/// Every state after `initial`, produced by iterating next_leg_state.
/// Throws CapacityError if the run is longer than `max_steps`.
std::vector<LegSimState> leg_elimination_steps(const LegSimState& initial, std::size_t max_steps,
                                               const ExtendedCount& stop_depth = 1);

/// State reached `step` steps after `initial` (step 0 is the start itself).
LegSimState leg_state_at(const LegSimState& initial, const ExtendedCount& step);

/// Closed-form length of a full elimination from legs of depth x
/// (x + 1 vertices each): 6 * 2^x - 2x - 6. Throws InputError for x == 0.
ExtendedCount leg_elimination_formula(const ExtendedCount& depth);

/// The explicit opening trees, labels 4 through 12.
std::vector<std::pair<ExtendedCount, TreeDescriptor>> initial_segment();

enum class PhaseKind { ExplicitPrefix, LegElimination, ChainCountdown };

struct ExplicitPhase {
  std::vector<TreeDescriptor> trees;
};

struct LegPhase {
  LegSimState initial;
  bool include_initial = true;
};

struct ChainPhase {
  ExtendedCount start_label;
  ExtendedCount start_length;
};

struct SequencePhase {
  PhaseKind kind;
  ExtendedCount start_position;
  ExtendedCount length;
  std::variant<ExplicitPhase, LegPhase, ChainPhase> params;

  ExtendedCount end_position() const { return start_position + length - 1; }
};

std::string to_string(PhaseKind kind);

SequencePhase explicit_phase(std::vector<TreeDescriptor> trees);
/// A leg-elimination run of `length` trees. Requires stem >= 1 so every
/// member is a two-leg tree.
SequencePhase leg_phase(LegSimState initial, bool include_initial, ExtendedCount length);
/// Chain(start_length), Chain(start_length - 1), ... for `length` trees.
SequencePhase chain_countdown(const ExtendedCount& start_label, const ExtendedCount& start_length);

struct SequenceDescription {
  std::vector<SequencePhase> phases;
  ExtendedCount total_length;
};

/// Assigns contiguous start positions from 1 and checks that leg phases
/// start at the label implied by their position. Throws ConstructionError.
SequenceDescription make_sequence(std::vector<SequencePhase> phases);

/// Number of vertices in each leg of the tree opening the second run.
inline constexpr unsigned kRestartLegVertices = 47;

/// The full construction: explicit prefix, the stem-2 run from label 12 to
/// label 94, the stem-1 run from label 95, then the final chain countdown.
/// Phase lengths follow the closed-form arithmetic; each leg run is
/// cross-checked against the simulator and a mismatch throws ConstructionError.
SequenceDescription build_full_sequence();

/// Same construction with a different restart leg length; only the default
/// reproduces the closed-form arithmetic.
SequenceDescription build_sequence_with_restart(const ExtendedCount& restart_leg_vertices);

/// Random access. Throws InputError outside 1..total_length.
TreeDescriptor tree_at(const SequenceDescription& seq, const ExtendedCount& position);

/// Sequential access: calls `visit(position, descriptor)` for every position
/// in [from, to], stepping the generation rules instead of seeking.
void for_each_tree(const SequenceDescription& seq, const ExtendedCount& from,
                   const ExtendedCount& to,
                   const std::function<void(const ExtendedCount&, const TreeDescriptor&)>& visit);

/// The arithmetic chain behind the final bound.
struct BoundDerivation {
  ExtendedCount first_run_start_label;  // 12
  ExtendedCount first_run_steps;        // formula at depth 4
  ExtendedCount first_run_end_label;    // 94
  ExtendedCount restart_label;          // 95
  ExtendedCount restart_depth;          // 46
  ExtendedCount restart_steps;          // formula at depth 46
  ExtendedCount restart_end_label;      // 95 + steps
  ExtendedCount chain_start;            // label and length of the first chain
  ExtendedCount last_label;             // chain_start + (chain_start - 1)
  ExtendedCount bound;                  // last_label - 3
};

BoundDerivation derive_bound();
ExtendedCount total_bound();

inline constexpr std::size_t kDefaultExportCap = 1'000'000;

/// `<position>\t<label>\t<descriptor>`
std::string format_record(const ExtendedCount& position, const TreeDescriptor& d);

/// Writes records for [from, to]. Throws CapacityError if the range holds
/// more than `cap` records and `force` is false.
void export_records(const SequenceDescription& seq, const ExtendedCount& from,
                    const ExtendedCount& to, std::ostream& out,
                    std::size_t cap = kDefaultExportCap, bool force = false);

}  // namespace weaktree
