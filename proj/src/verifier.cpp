#include "weaktree/verifier.hpp"

#include "weaktree/errors.hpp"
#include "weaktree/families.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace weaktree {

std::string to_string(VerificationMode mode) {
  switch (mode) {
    case VerificationMode::Explicit: return "explicit";
    case VerificationMode::Symbolic: return "symbolic";
    case VerificationMode::Mixed: return "mixed";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Valid: return "valid";
    case Verdict::Invalid: return "invalid";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(ClassOutcome outcome) {
  switch (outcome) {
    case ClassOutcome::Clean: return "clean";
    case ClassOutcome::Violated: return "violated";
    case ClassOutcome::Unresolved: return "unresolved";
  }
  return "unknown";
}

namespace {

unsigned worker_count(ParallelOptions options) {
  unsigned n = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  return std::max(1u, n);
}

// Runs fn(i, j, checker, sink) for all i < j < n, rows striped over threads.
// Each worker owns its checker and output vector; the caller sorts the merge.
template <class Result, class Fn>
std::vector<Result> for_each_pair(std::size_t n, ParallelOptions options, Fn fn) {
  const unsigned workers = std::min<std::size_t>(worker_count(options), std::max<std::size_t>(n, 1));
  std::vector<std::vector<Result>> partial(workers);
  auto work = [&](unsigned w) {
    InfEmbeddingChecker checker;
    for (std::size_t i = w; i < n; i += workers) {
      for (std::size_t j = i + 1; j < n; ++j) fn(i, j, checker, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Result> merged;
  for (auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
  return merged;
}

void sort_violations(VerificationReport& report) {
  std::sort(report.budget_violations.begin(), report.budget_violations.end(),
            [](const auto& a, const auto& b) { return a.position < b.position; });
  std::sort(report.embedding_violations.begin(), report.embedding_violations.end(),
            [](const auto& a, const auto& b) {
              return a.earlier != b.earlier ? a.earlier < b.earlier : a.later < b.later;
            });
  std::sort(report.disagreements.begin(), report.disagreements.end(),
            [](const auto& a, const auto& b) {
              return a.earlier != b.earlier ? a.earlier < b.earlier : a.later < b.later;
            });
}

void settle_verdict(VerificationReport& report) {
  const bool unresolved = std::any_of(report.pair_classes.begin(), report.pair_classes.end(),
                                      [](const auto& c) { return c.outcome == ClassOutcome::Unresolved; });
  if (!report.budget_violations.empty() || !report.embedding_violations.empty()) {
    report.verdict = Verdict::Invalid;
  } else if (unresolved || !report.disagreements.empty()) {
    report.verdict = Verdict::Inconclusive;
  } else {
    report.verdict = Verdict::Valid;
  }
}

ExtendedCount pair_count(const ExtendedCount& n) { return n * (n - 1) / 2; }

struct Member {
  ExtendedCount position;
  TreeDescriptor descriptor;
};

// One round of a leg run: members (stem, left, min_leg) at consecutive
// positions with left running from first_max down to last_max.
struct LegGroup {
  ExtendedCount min_leg;
  ExtendedCount first_position;
  ExtendedCount last_position;
  ExtendedCount first_max;
  ExtendedCount last_max;
};

// Family-level summary of one phase. Every member dominates some element of
// `minimal` and is dominated by some element of `maximal`, both taken from
// the phase itself, so a cross-phase pair class embeds somewhere iff some
// minimal earlier element embeds into some maximal later one.
struct PhaseProfile {
  PhaseKind kind;
  ExtendedCount start;
  ExtendedCount length;
  std::vector<Member> members;  // explicit phases only
  ExtendedCount stem;
  std::vector<LegGroup> groups;  // leg runs only
  ExtendedCount longest;         // chain countdowns only
  ExtendedCount shortest;
  std::vector<Member> minimal;
  std::vector<Member> maximal;
};

PhaseProfile profile_of(const SequencePhase& phase) {
  PhaseProfile p{phase.kind, phase.start_position, phase.length, {}, 0, {}, 0, 0, {}, {}};
  switch (phase.kind) {
    case PhaseKind::ExplicitPrefix: {
      const auto& trees = std::get<ExplicitPhase>(phase.params).trees;
      ExtendedCount pos = phase.start_position;
      for (const auto& t : trees) p.members.push_back({pos++, normalize(t)});
      p.minimal = p.members;
      p.maximal = p.members;
      break;
    }
    case PhaseKind::LegElimination: {
      const auto& leg = std::get<LegPhase>(phase.params);
      p.stem = leg.initial.stem;
      ExtendedCount pos = phase.start_position;
      ExtendedCount remaining = phase.length;
      LegSimState at = leg.initial;
      if (leg.include_initial) {
        p.groups.push_back({at.right, pos, pos, at.left, at.left});
        ++pos;
        --remaining;
      }
      while (remaining > 0) {
        const LegSimState ext = next_leg_state(at);
        const ExtendedCount round = ext.left - ext.right + 1;
        const ExtendedCount taken = std::min(round, remaining);
        p.groups.push_back({ext.right, pos, pos + taken - 1, ext.left, ext.left - (taken - 1)});
        pos += taken;
        remaining -= taken;
        at = {ext.label + round - 1, at.stem, ext.right, ext.right};
      }
      for (const auto& g : p.groups) {
        p.minimal.push_back({g.last_position, TreeDescriptor::two_leg(p.stem, g.last_max, g.min_leg)});
        p.maximal.push_back(
            {g.first_position, TreeDescriptor::two_leg(p.stem, g.first_max, g.min_leg)});
      }
      break;
    }
    case PhaseKind::ChainCountdown: {
      p.longest = std::get<ChainPhase>(phase.params).start_length;
      p.shortest = p.longest - (phase.length - 1);
      if (p.shortest >= 1) {
        p.minimal.push_back({phase.end_position(), TreeDescriptor::chain(p.shortest)});
        p.maximal.push_back({phase.start_position, TreeDescriptor::chain(p.longest)});
      }
      break;
    }
  }
  return p;
}

void check_budgets(const PhaseProfile& p, VerificationReport& report) {
  auto check = [&](const ExtendedCount& position, const ExtendedCount& size) {
    const ExtendedCount budget = position + kSlack;
    if (size > budget) report.budget_violations.push_back({position, size, budget});
  };
  switch (p.kind) {
    case PhaseKind::ExplicitPrefix:
      for (const auto& m : p.members) check(m.position, desc_size(m.descriptor));
      break;
    case PhaseKind::LegElimination:
      // Within a round size shrinks while the budget grows: the first member is binding.
      for (const auto& g : p.groups) check(g.first_position, p.stem + g.first_max + g.min_leg);
      break;
    case PhaseKind::ChainCountdown:
      check(p.start, p.longest);
      break;
  }
}

std::string kind_tag(PhaseKind k) {
  switch (k) {
    case PhaseKind::ExplicitPrefix: return "explicit";
    case PhaseKind::LegElimination: return "leg-run";
    case PhaseKind::ChainCountdown: return "chain";
  }
  return "?";
}

std::string cross_rule(PhaseKind earlier, PhaseKind later) {
  using K = PhaseKind;
  if (earlier == K::LegElimination && later == K::ChainCountdown) {
    return "leaf antichain: two-leg trees never embed into chains";
  }
  if (earlier == K::ChainCountdown) return "height: shortest earlier chain vs tallest later tree";
  if (earlier == K::LegElimination && later == K::LegElimination) {
    return "round extremes: stem, minimum leg and maximum leg comparison";
  }
  if (earlier == K::ExplicitPrefix && later != K::ExplicitPrefix) {
    return "leaf count, stem and leg comparison against round maxima";
  }
  return "minimal earlier members vs maximal later members, bounded expansion";
}

void within_phase(std::size_t index, const PhaseProfile& p, VerificationReport& report) {
  PairClassReport cls;
  cls.earlier_phase = cls.later_phase = index;
  cls.name = kind_tag(p.kind) + "[" + std::to_string(index) + "] internal";
  cls.pairs = pair_count(p.length);
  switch (p.kind) {
    case PhaseKind::ExplicitPrefix: {
      cls.rule = "pairwise family predicate with bounded expansion";
      for (std::size_t i = 0; i < p.members.size(); ++i) {
        for (std::size_t j = i + 1; j < p.members.size(); ++j) {
          const auto& a = p.members[i];
          const auto& b = p.members[j];
          try {
            if (family_embeds(a.descriptor, b.descriptor)) {
              cls.outcome = ClassOutcome::Violated;
              report.embedding_violations.push_back(
                  {a.position, b.position, std::nullopt,
                   a.descriptor.to_string() + " <= " + b.descriptor.to_string()});
            }
          } catch (const CapacityError& e) {
            if (cls.outcome == ClassOutcome::Clean) cls.outcome = ClassOutcome::Unresolved;
            cls.detail = e.what();
          }
        }
      }
      break;
    }
    case PhaseKind::LegElimination: {
      cls.rule =
          "(a) equal minimum leg with strictly shrinking maximum leg; "
          "(b) minimum leg strictly decreasing across rounds";
      for (std::size_t g = 0; g < p.groups.size(); ++g) {
        const auto& grp = p.groups[g];
        const bool unit_steps = grp.first_max - grp.last_max == grp.last_position - grp.first_position;
        const bool ordered_legs = grp.last_max >= grp.min_leg;
        const bool decreasing = g == 0 || p.groups[g - 1].min_leg > grp.min_leg;
        if (!unit_steps || !ordered_legs || !decreasing) {
          cls.outcome = ClassOutcome::Unresolved;
          cls.detail = "round at position " + grp.first_position.str() +
                       " does not satisfy the run lemmas";
        }
      }
      break;
    }
    case PhaseKind::ChainCountdown:
      cls.rule = "chain lengths strictly decrease";
      if (p.shortest < 1) {
        cls.outcome = ClassOutcome::Unresolved;
        cls.detail = "countdown runs past the single vertex";
      }
      break;
  }
  report.pair_classes.push_back(std::move(cls));
}

void across_phases(std::size_t i, const PhaseProfile& p, std::size_t j, const PhaseProfile& q,
                   VerificationReport& report) {
  PairClassReport cls;
  cls.earlier_phase = i;
  cls.later_phase = j;
  cls.name = kind_tag(p.kind) + "[" + std::to_string(i) + "] x " + kind_tag(q.kind) + "[" +
             std::to_string(j) + "]";
  cls.rule = cross_rule(p.kind, q.kind);
  cls.pairs = p.length * q.length;
  for (const auto& a : p.minimal) {
    for (const auto& b : q.maximal) {
      try {
        if (family_embeds(a.descriptor, b.descriptor)) {
          cls.outcome = ClassOutcome::Violated;
          report.embedding_violations.push_back(
              {a.position, b.position, std::nullopt,
               a.descriptor.to_string() + " <= " + b.descriptor.to_string()});
        }
      } catch (const CapacityError& e) {
        if (cls.outcome == ClassOutcome::Clean) cls.outcome = ClassOutcome::Unresolved;
        cls.detail = e.what();
      }
    }
  }
  report.pair_classes.push_back(std::move(cls));
}

std::vector<PhaseProfile> profiles_of(const SequenceDescription& seq) {
  std::vector<PhaseProfile> out;
  out.reserve(seq.phases.size());
  for (const auto& phase : seq.phases) out.push_back(profile_of(phase));
  return out;
}

}  // namespace

VerificationReport verify_explicit_sequence(std::span<const RootedTree> trees, unsigned slack,
                                            ParallelOptions options) {
  VerificationReport report;
  report.mode = VerificationMode::Explicit;
  report.checked_pairs = pair_count(trees.size());
  for (std::size_t k = 0; k < trees.size(); ++k) {
    const std::size_t budget = k + 1 + slack;
    if (trees[k].size() > budget) report.budget_violations.push_back({k + 1, trees[k].size(), budget});
  }
  report.embedding_violations = for_each_pair<EmbeddingViolation>(
      trees.size(), options,
      [&](std::size_t i, std::size_t j, InfEmbeddingChecker& checker, auto& sink) {
        if (auto w = checker.witness(trees[i], trees[j])) {
          sink.push_back({i + 1, j + 1, std::move(w), trees[i].code() + " <= " + trees[j].code()});
        }
      });
  sort_violations(report);
  settle_verdict(report);
  return report;
}

VerificationReport verify_phases(const SequenceDescription& seq) {
  VerificationReport report;
  report.mode = VerificationMode::Symbolic;
  report.checked_pairs = 0;

  ExtendedCount expected_start = 1;
  bool tiled = true;
  for (const auto& phase : seq.phases) {
    if (phase.start_position != expected_start || phase.length < 1) tiled = false;
    expected_start = phase.start_position + phase.length;
  }
  if (!tiled || expected_start - 1 != seq.total_length) {
    report.pair_classes.push_back({0, 0, "phase-tiling", "phases tile 1..total_length", 0,
                                   ClassOutcome::Unresolved,
                                   "phase positions do not tile the sequence"});
  }

  const auto profiles = profiles_of(seq);
  for (const auto& p : profiles) check_budgets(p, report);
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    within_phase(i, profiles[i], report);
    for (std::size_t j = i + 1; j < profiles.size(); ++j) {
      across_phases(i, profiles[i], j, profiles[j], report);
    }
  }
  for (const auto& c : report.pair_classes) report.checked_pairs += c.pairs;
  sort_violations(report);
  settle_verdict(report);
  return report;
}

VerificationReport cross_validate(const SequenceDescription& seq, std::size_t limit,
                                  ParallelOptions options) {
  const VerificationReport symbolic = verify_phases(seq);
  std::map<std::pair<std::size_t, std::size_t>, ClassOutcome> class_outcome;
  for (const auto& c : symbolic.pair_classes) {
    class_outcome[{c.earlier_phase, c.later_phase}] = c.outcome;
  }

  // Positions whose tree has at most `limit` vertices, with their phase.
  std::vector<std::pair<ExtendedCount, std::size_t>> covered;
  const auto profiles = profiles_of(seq);
  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const auto& p = profiles[k];
    switch (p.kind) {
      case PhaseKind::ExplicitPrefix:
        for (const auto& m : p.members) {
          if (desc_size(m.descriptor) <= limit) covered.emplace_back(m.position, k);
        }
        break;
      case PhaseKind::LegElimination:
        for (const auto& g : p.groups) {
          // Members run left = first_max .. last_max; keep those that fit.
          const ExtendedCount fit = ExtendedCount(limit) - p.stem - g.min_leg;
          if (fit < g.last_max) continue;
          const ExtendedCount top = std::min(fit, g.first_max);
          for (ExtendedCount pos = g.first_position + (g.first_max - top); pos <= g.last_position; ++pos) {
            covered.emplace_back(pos, k);
          }
        }
        break;
      case PhaseKind::ChainCountdown:
        if (p.shortest >= 1 && p.shortest <= limit) {
          const ExtendedCount top = std::min(ExtendedCount(limit), p.longest);
          for (ExtendedCount pos = p.start + (p.longest - top); pos < p.start + p.length; ++pos) {
            covered.emplace_back(pos, k);
          }
        }
        break;
    }
  }

  std::vector<TreeDescriptor> descriptors;
  std::vector<RootedTree> trees;
  descriptors.reserve(covered.size());
  trees.reserve(covered.size());
  VerificationReport report;
  report.mode = VerificationMode::Mixed;
  report.pair_classes = symbolic.pair_classes;
  for (const auto& [pos, phase] : covered) {
    descriptors.push_back(normalize(tree_at(seq, pos)));
    trees.push_back(expand(descriptors.back(), limit));
    const ExtendedCount budget = pos + kSlack;
    if (trees.back().size() > budget) report.budget_violations.push_back({pos, trees.back().size(), budget});
  }
  report.checked_pairs = pair_count(covered.size());

  struct Finding {
    std::optional<EmbeddingViolation> violation;
    std::optional<Disagreement> disagreement;
  };
  const auto findings = for_each_pair<Finding>(
      covered.size(), options,
      [&](std::size_t i, std::size_t j, InfEmbeddingChecker& checker, auto& sink) {
        const bool symbolic_embeds = family_embeds(descriptors[i], descriptors[j], limit);
        const auto witness = checker.witness(trees[i], trees[j]);
        const bool explicit_embeds = witness.has_value();
        const ClassOutcome outcome = class_outcome.at({covered[i].second, covered[j].second});
        Finding f;
        if (explicit_embeds) {
          f.violation = EmbeddingViolation{
              covered[i].first, covered[j].first, witness,
              descriptors[i].to_string() + " <= " + descriptors[j].to_string()};
        }
        if (explicit_embeds != symbolic_embeds ||
            (explicit_embeds && outcome == ClassOutcome::Clean)) {
          f.disagreement = Disagreement{covered[i].first, covered[j].first, explicit_embeds,
                                        symbolic_embeds};
        }
        if (f.violation || f.disagreement) sink.push_back(std::move(f));
      });
  for (const auto& f : findings) {
    if (f.violation) report.embedding_violations.push_back(*f.violation);
    if (f.disagreement) report.disagreements.push_back(*f.disagreement);
  }
  sort_violations(report);
  settle_verdict(report);
  return report;
}

}  // namespace weaktree
