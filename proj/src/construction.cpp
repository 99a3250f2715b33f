#include "weaktree/construction.hpp"

#include "weaktree/errors.hpp"

#include <ostream>

namespace weaktree {

namespace {

void require_start(const LegSimState& s, const ExtendedCount& stop_depth) {
  if (s.left != s.right || s.right < 2) {
    throw InputError("leg elimination must start from a symmetric state with legs >= 2");
  }
  if (stop_depth < 1 || stop_depth >= s.right) {
    throw InputError("stop depth must lie between 1 and the starting leg length");
  }
  if (s.stem < 0 || s.size() > s.label) {
    throw InputError("starting state exceeds its vertex budget " + s.label.str());
  }
}

// Extension state that opens the round starting at symmetric state `s`.
LegSimState extension_of(const LegSimState& s) {
  LegSimState next{s.label + 1, s.stem, 0, s.right - 1};
  next.left = next.label - s.stem - next.right;
  return next;
}

}  // namespace

LegSimState next_leg_state(const LegSimState& state) {
  if (state.left > state.right) {
    return {state.label + 1, state.stem, state.left - 1, state.right};
  }
  if (state.right <= 1) throw InputError("legs (1, 1) end the elimination");
  return extension_of(state);
}

LegSimulation simulate_leg_elimination(const LegSimState& initial,
                                       const ExtendedCount& stop_depth) {
  require_start(initial, stop_depth);
  LegSimulation sim;
  sim.steps = 0;
  sim.rows.push_back({LegRowKind::Start, initial});
  LegSimState at = initial;
  while (at.right > stop_depth) {
    const LegSimState ext = extension_of(at);
    const ExtendedCount extra = ext.left - ext.right;  // decrements to symmetry
    const LegSimState sym{ext.label + extra, at.stem, ext.right, ext.right};
    sim.rows.push_back({LegRowKind::Extension, ext});
    sim.rows.push_back({LegRowKind::Symmetric, sym});
    sim.steps += extra + 1;
    at = sym;
  }
  return sim;
}

std::vector<LegSimState> leg_elimination_steps(const LegSimState& initial, std::size_t max_steps,
                                               const ExtendedCount& stop_depth) {
  require_start(initial, stop_depth);
  std::vector<LegSimState> out;
  LegSimState at = initial;
  while (!(at.left == stop_depth && at.right == stop_depth)) {
    if (out.size() == max_steps) {
      throw CapacityError("leg elimination run exceeds " + std::to_string(max_steps) + " steps");
    }
    at = next_leg_state(at);
    out.push_back(at);
  }
  return out;
}

LegSimState leg_state_at(const LegSimState& initial, const ExtendedCount& step) {
  require_start(initial, 1);
  if (step < 0) throw InputError("negative step");
  ExtendedCount remaining = step;
  LegSimState at = initial;
  while (remaining > 0) {
    if (at.right <= 1) throw InputError("step lies beyond the end of the elimination run");
    const LegSimState ext = extension_of(at);
    const ExtendedCount round = ext.left - ext.right + 1;
    if (remaining <= round) {
      LegSimState s = ext;
      s.left -= remaining - 1;
      s.label += remaining - 1;
      return s;
    }
    remaining -= round;
    at = {ext.label + round - 1, at.stem, ext.right, ext.right};
  }
  return at;
}

ExtendedCount leg_elimination_formula(const ExtendedCount& depth) {
  if (depth < 1) throw InputError("leg depth must be at least 1");
  const unsigned x = static_cast<unsigned>(to_size(depth));
  return 6 * pow2(x) - 2 * depth - 6;
}

std::vector<std::pair<ExtendedCount, TreeDescriptor>> initial_segment() {
  std::vector<std::pair<ExtendedCount, TreeDescriptor>> out;
  out.emplace_back(4, TreeDescriptor::explicit_tree(parse_tree("(()()())")));
  out.emplace_back(5, TreeDescriptor::explicit_tree(parse_tree("(()(()()))")));
  out.emplace_back(6, TreeDescriptor::two_leg(4, 1, 1));
  out.emplace_back(7, TreeDescriptor::two_leg(3, 2, 2));
  out.emplace_back(8, TreeDescriptor::two_leg(3, 4, 1));
  out.emplace_back(9, TreeDescriptor::two_leg(3, 3, 1));
  out.emplace_back(10, TreeDescriptor::two_leg(3, 2, 1));
  out.emplace_back(11, TreeDescriptor::two_leg(3, 1, 1));
  out.emplace_back(12, TreeDescriptor::two_leg(2, 5, 5));
  return out;
}

std::string to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::ExplicitPrefix: return "explicit-prefix";
    case PhaseKind::LegElimination: return "leg-elimination";
    case PhaseKind::ChainCountdown: return "chain-countdown";
  }
  return "unknown";
}

SequencePhase explicit_phase(std::vector<TreeDescriptor> trees) {
  if (trees.empty()) throw InputError("explicit phase needs at least one tree");
  const ExtendedCount length = trees.size();
  return {PhaseKind::ExplicitPrefix, 0, length, ExplicitPhase{std::move(trees)}};
}

SequencePhase leg_phase(LegSimState initial, bool include_initial, ExtendedCount length) {
  if (initial.stem < 1) throw InputError("leg phases need a stem of at least one vertex");
  const LegSimulation sim = simulate_leg_elimination(initial);
  const ExtendedCount available = sim.steps + (include_initial ? 1 : 0);
  if (length < 1 || length > available) {
    throw InputError("leg phase length " + length.str() + " outside 1.." + available.str());
  }
  return {PhaseKind::LegElimination, 0, std::move(length),
          LegPhase{std::move(initial), include_initial}};
}

SequencePhase chain_countdown(const ExtendedCount& start_label,
                              const ExtendedCount& start_length) {
  if (start_length < 1) throw InputError("chain countdown needs a chain of at least one vertex");
  return {PhaseKind::ChainCountdown, 0, start_length, ChainPhase{start_label, start_length}};
}

SequenceDescription make_sequence(std::vector<SequencePhase> phases) {
  SequenceDescription seq;
  ExtendedCount next = 1;
  for (auto& phase : phases) {
    if (phase.length < 1) throw ConstructionError("phase with empty length");
    phase.start_position = next;
    if (phase.kind == PhaseKind::LegElimination) {
      const auto& leg = std::get<LegPhase>(phase.params);
      const ExtendedCount expected = label_of(next) - (leg.include_initial ? 0 : 1);
      if (leg.initial.label != expected) {
        throw ConstructionError("leg phase starting at position " + next.str() +
                                " expects initial label " + expected.str() + ", found " +
                                leg.initial.label.str());
      }
    }
    if (phase.kind == PhaseKind::ChainCountdown &&
        std::get<ChainPhase>(phase.params).start_label != label_of(next)) {
      throw ConstructionError("chain countdown placed at label " + label_of(next).str() +
                              " but declared for label " +
                              std::get<ChainPhase>(phase.params).start_label.str());
    }
    if (phase.kind == PhaseKind::ExplicitPrefix &&
        phase.length != std::get<ExplicitPhase>(phase.params).trees.size()) {
      throw ConstructionError("explicit phase length disagrees with its tree list");
    }
    next += phase.length;
  }
  seq.total_length = next - 1;
  seq.phases = std::move(phases);
  return seq;
}

SequenceDescription build_sequence_with_restart(const ExtendedCount& restart_leg_vertices) {
  std::vector<SequencePhase> phases;

  const auto prefix = initial_segment();
  std::vector<TreeDescriptor> opening;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].first != label_of(i + 1)) {
      throw ConstructionError("initial segment labels are not consecutive from 4");
    }
    opening.push_back(prefix[i].second);
  }
  const TwoLeg& tree12 = opening.back().as_two_leg();
  const LegSimState first_start{prefix.back().first, tree12.stem, tree12.left, tree12.right};
  phases.push_back(explicit_phase(std::move(opening)));

  // First run: closed-form length, checked against the greedy simulator.
  const ExtendedCount first_steps = leg_elimination_formula(first_start.left - 1);
  const LegSimulation first_sim = simulate_leg_elimination(first_start);
  if (first_sim.steps != first_steps) {
    throw ConstructionError("first leg run: simulator takes " + first_sim.steps.str() +
                            " steps, closed form gives " + first_steps.str());
  }
  phases.push_back(leg_phase(first_start, false, first_steps));
  const ExtendedCount first_end = first_start.label + first_steps;

  const LegSimState restart{first_end + 1, 1, restart_leg_vertices, restart_leg_vertices};
  if (restart.size() > restart.label) {
    throw ConstructionError("restart tree exceeds its budget at label " + restart.label.str());
  }
  const ExtendedCount restart_steps = leg_elimination_formula(restart_leg_vertices - 1);
  const LegSimulation restart_sim = simulate_leg_elimination(restart);
  if (restart_sim.steps != restart_steps) {
    throw ConstructionError("restart run from twoleg:1:" + restart_leg_vertices.str() + ":" +
                            restart_leg_vertices.str() + " at label " + restart.label.str() +
                            ": simulator takes " + restart_sim.steps.str() +
                            " steps, closed form gives " + restart_steps.str());
  }
  phases.push_back(leg_phase(restart, true, restart_steps + 1));

  const ExtendedCount chain_start = restart.label + restart_steps + 1;
  phases.push_back(chain_countdown(chain_start, chain_start));

  return make_sequence(std::move(phases));
}

SequenceDescription build_full_sequence() {
  return build_sequence_with_restart(kRestartLegVertices);
}

namespace {

const SequencePhase& phase_containing(const SequenceDescription& seq,
                                      const ExtendedCount& position) {
  if (position < 1 || position > seq.total_length) {
    throw InputError("position " + position.str() + " outside 1.." + seq.total_length.str());
  }
  for (const auto& phase : seq.phases) {
    if (position <= phase.end_position()) return phase;
  }
  throw ConstructionError("phases do not cover position " + position.str());
}

TreeDescriptor leg_descriptor(const LegSimState& s) {
  return TreeDescriptor::two_leg(s.stem, s.left, s.right);
}

}  // namespace

TreeDescriptor tree_at(const SequenceDescription& seq, const ExtendedCount& position) {
  const SequencePhase& phase = phase_containing(seq, position);
  const ExtendedCount offset = position - phase.start_position;
  switch (phase.kind) {
    case PhaseKind::ExplicitPrefix:
      return std::get<ExplicitPhase>(phase.params).trees[to_size(offset)];
    case PhaseKind::LegElimination: {
      const auto& leg = std::get<LegPhase>(phase.params);
      return leg_descriptor(leg_state_at(leg.initial, offset + (leg.include_initial ? 0 : 1)));
    }
    case PhaseKind::ChainCountdown:
      return TreeDescriptor::chain(std::get<ChainPhase>(phase.params).start_length - offset);
  }
  throw ConstructionError("unknown phase kind");
}

void for_each_tree(const SequenceDescription& seq, const ExtendedCount& from,
                   const ExtendedCount& to,
                   const std::function<void(const ExtendedCount&, const TreeDescriptor&)>& visit) {
  if (from < 1 || to > seq.total_length || from > to) {
    throw InputError("range " + from.str() + ".." + to.str() + " outside 1.." +
                     seq.total_length.str());
  }
  ExtendedCount position = from;
  for (const auto& phase : seq.phases) {
    if (position > to) break;
    if (position > phase.end_position()) continue;
    const ExtendedCount last = phase.end_position() < to ? phase.end_position() : to;
    const ExtendedCount offset = position - phase.start_position;
    switch (phase.kind) {
      case PhaseKind::ExplicitPrefix: {
        const auto& trees = std::get<ExplicitPhase>(phase.params).trees;
        for (std::size_t i = to_size(offset); position <= last; ++i, ++position) {
          visit(position, trees[i]);
        }
        break;
      }
      case PhaseKind::LegElimination: {
        const auto& leg = std::get<LegPhase>(phase.params);
        LegSimState s = leg_state_at(leg.initial, offset + (leg.include_initial ? 0 : 1));
        while (true) {
          visit(position, leg_descriptor(s));
          if (position == last) break;
          ++position;
          s = next_leg_state(s);
        }
        ++position;
        break;
      }
      case PhaseKind::ChainCountdown: {
        ExtendedCount len = std::get<ChainPhase>(phase.params).start_length - offset;
        for (; position <= last; ++position, --len) visit(position, TreeDescriptor::chain(len));
        break;
      }
    }
  }
}

BoundDerivation derive_bound() {
  const auto prefix = initial_segment();
  const TwoLeg& tree12 = prefix.back().second.as_two_leg();

  BoundDerivation d;
  d.first_run_start_label = prefix.back().first;
  d.first_run_steps = leg_elimination_formula(tree12.left - 1);
  d.first_run_end_label = d.first_run_start_label + d.first_run_steps;
  d.restart_label = d.first_run_end_label + 1;
  d.restart_depth = kRestartLegVertices - 1;
  d.restart_steps = leg_elimination_formula(d.restart_depth);
  d.restart_end_label = d.restart_label + d.restart_steps;
  d.chain_start = d.restart_end_label + 1;
  // A chain of m vertices is followed by m - 1 shorter chains.
  d.last_label = d.chain_start + (d.chain_start - 1);
  d.bound = d.last_label - kLabelOffset;
  return d;
}

ExtendedCount total_bound() { return derive_bound().bound; }

std::string format_record(const ExtendedCount& position, const TreeDescriptor& d) {
  return position.str() + "\t" + label_of(position).str() + "\t" + d.to_string();
}

void export_records(const SequenceDescription& seq, const ExtendedCount& from,
                    const ExtendedCount& to, std::ostream& out, std::size_t cap, bool force) {
  if (from < 1 || to > seq.total_length || from > to) {
    throw InputError("range " + from.str() + ".." + to.str() + " outside 1.." +
                     seq.total_length.str());
  }
  if (!force && to - from + 1 > cap) {
    throw CapacityError("export of " + ExtendedCount(to - from + 1).str() +
                        " records exceeds the cap of " + std::to_string(cap) +
                        " (use --force to override)");
  }
  for_each_tree(seq, from, to, [&](const ExtendedCount& position, const TreeDescriptor& d) {
    out << format_record(position, d) << '\n';
  });
}

}  // namespace weaktree
