#include "cli.hpp"

#include "weaktree/construction.hpp"
#include "weaktree/embedding.hpp"
#include "weaktree/errors.hpp"
#include "weaktree/families.hpp"
#include "weaktree/search.hpp"
#include "weaktree/serialize.hpp"
#include "weaktree/tree.hpp"
#include "weaktree/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace weaktree::cli {

using nlohmann::json;

namespace {

/// Largest prefix `verify --prefix` will materialize.
constexpr std::size_t kPrefixCap = 10'000;

struct Options {
  std::string format = "text";
  unsigned threads = 0;

  std::string tree_a;
  std::string tree_b;
  bool witness = false;

  std::string from = "1";
  std::string to;
  bool force = false;

  std::optional<std::size_t> prefix;
  bool symbolic = false;
  std::optional<std::size_t> cross;

  unsigned n = 0;
  std::size_t step_cap = 100;
  std::optional<std::size_t> size_cap;
  std::uint64_t node_budget = kDefaultNodeBudget;

  std::optional<std::string> x;

  std::string stem;
  std::string depth;
  std::string label;
  std::string stop = "1";
};

bool json_out(const Options& o) { return o.format == "json"; }

/// A parenthesis code or a descriptor in "kind:..." syntax.
TreeDescriptor parse_argument(const std::string& text) {
  if (!text.empty() && text.front() == '(') return TreeDescriptor::explicit_tree(parse_tree(text));
  return TreeDescriptor::parse(text);
}

std::optional<RootedTree> try_expand(const TreeDescriptor& d) {
  if (desc_size(d) > kDefaultExpandLimit) return std::nullopt;
  return expand(d);
}

int cmd_embed(const Options& o, std::ostream& out) {
  const TreeDescriptor a = parse_argument(o.tree_a);
  const TreeDescriptor b = parse_argument(o.tree_b);
  EmbedAnswer answer{a.to_string(), b.to_string(), false, std::nullopt};
  const auto ta = try_expand(a);
  const auto tb = try_expand(b);
  if (ta && tb) {
    auto w = inf_embeds_witness(*ta, *tb);
    answer.embeds = w.has_value();
    if (o.witness) answer.witness = std::move(w);
  } else {
    answer.embeds = family_embeds(normalize(a), normalize(b));
  }

  if (json_out(o)) {
    out << json(answer).dump() << '\n';
  } else {
    out << "source: " << answer.source << '\n' << "target: " << answer.target << '\n';
    out << (answer.embeds ? "inf-embedding found" : "no inf-embedding") << '\n';
    if (o.witness && answer.embeds) {
      if (answer.witness) {
        out << "witness:\n";
        for (const auto& [s, t] : answer.witness->mapping) out << "  " << s.index << " -> " << t.index << '\n';
      } else {
        out << "witness: unavailable for trees above " << kDefaultExpandLimit << " vertices\n";
      }
    }
  }
  return answer.embeds ? kExitEmbeds : kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const SequenceDescription seq = build_full_sequence();
  const ExtendedCount from = parse_count(o.from);
  const ExtendedCount to = parse_count(o.to);
  if (!json_out(o)) {
    export_records(seq, from, to, out, kDefaultExportCap, o.force);
    return kExitOk;
  }
  if (!o.force && to >= from && to - from + 1 > kDefaultExportCap) {
    throw CapacityError("range of " + weaktree::to_string(to - from + 1) +
                        " records exceeds the cap of " + std::to_string(kDefaultExportCap) +
                        "; pass --force to override");
  }
  for_each_tree(seq, from, to, [&](const ExtendedCount& pos, const TreeDescriptor& d) {
    out << json(SequenceRecord{pos, label_of(pos), d}).dump() << '\n';
  });
  return kExitOk;
}

void print_report(const VerificationReport& r, std::ostream& out) {
  out << "mode: " << to_string(r.mode) << '\n';
  out << "verdict: " << to_string(r.verdict) << '\n';
  out << "checked_pairs: " << r.checked_pairs << '\n';
  out << "budget_violations: " << r.budget_violations.size() << '\n';
  for (const auto& v : r.budget_violations) {
    out << "  position " << v.position << ": size " << v.size << " > budget " << v.budget << '\n';
  }
  out << "embedding_violations: " << r.embedding_violations.size() << '\n';
  for (const auto& v : r.embedding_violations) {
    out << "  " << v.earlier << " <= " << v.later;
    if (!v.family_pair.empty()) out << "  [" << v.family_pair << "]";
    out << '\n';
  }
  if (!r.pair_classes.empty()) {
    out << "pair_classes: " << r.pair_classes.size() << '\n';
    for (const auto& c : r.pair_classes) {
      out << "  " << to_string(c.outcome) << "\t" << c.name << "\t" << c.rule << "\tpairs=" << c.pairs;
      if (!c.detail.empty()) out << "\t" << c.detail;
      out << '\n';
    }
  }
  out << "disagreements: " << r.disagreements.size() << '\n';
  for (const auto& d : r.disagreements) {
    out << "  " << d.earlier << " vs " << d.later << ": explicit=" << d.explicit_embeds
        << " symbolic=" << d.symbolic_embeds << '\n';
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const int chosen = int(o.prefix.has_value()) + int(o.symbolic) + int(o.cross.has_value());
  if (chosen != 1) throw InputError("verify needs exactly one of --prefix, --symbolic, --cross");

  const SequenceDescription seq = build_full_sequence();
  const ParallelOptions par{o.threads};
  VerificationReport report;
  if (o.prefix) {
    if (*o.prefix == 0) throw InputError("prefix must be at least 1");
    if (*o.prefix > kPrefixCap) {
      throw CapacityError("prefix of " + std::to_string(*o.prefix) + " exceeds the cap of " +
                          std::to_string(kPrefixCap));
    }
    std::vector<RootedTree> trees;
    for_each_tree(seq, 1, *o.prefix,
                  [&](const ExtendedCount&, const TreeDescriptor& d) { trees.push_back(expand(d)); });
    report = verify_explicit_sequence(trees, kSlack, par);
  } else if (o.symbolic) {
    report = verify_phases(seq);
  } else {
    report = cross_validate(seq, *o.cross, par);
  }

  if (json_out(o)) {
    out << json(report).dump(2) << '\n';
  } else {
    print_report(report, out);
  }
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  const std::size_t size_cap = o.size_cap.value_or(default_size_cap(o.n));
  const SearchResult r = longest_bad_sequence(o.n, o.step_cap, size_cap, o.node_budget);
  if (json_out(o)) {
    out << json(r).dump(2) << '\n';
    return kExitOk;
  }
  out << "n: " << r.n << '\n';
  out << "length: " << r.length << '\n';
  out << "exhausted: " << (r.exhausted ? "true" : "false") << '\n';
  out << "caps: step_cap=" << r.step_cap << " size_cap=" << r.size_cap << " node_budget=" << r.node_budget
      << '\n';
  out << "nodes: " << r.nodes << '\n';
  out << "cuts:";
  if (r.cuts.empty()) out << " none";
  for (const auto& c : r.cuts) out << ' ' << c;
  out << '\n' << "witness:\n";
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    out << (i + 1) << '\t' << (i + 1 + r.n) << '\t' << "explicit:" << r.witness[i] << '\n';
  }
  return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  if (o.x) {
    const ExtendedCount x = parse_count(*o.x);
    const ExtendedCount steps = leg_elimination_formula(x);
    if (json_out(o)) {
      out << json{{"x", x}, {"steps", steps}}.dump() << '\n';
    } else {
      out << steps << '\n';
    }
    return kExitOk;
  }
  const BoundDerivation b = derive_bound();
  if (json_out(o)) {
    out << json(b).dump(2) << '\n';
    return kExitOk;
  }
  out << "L(x) = 6*2^x - 2x - 6\n";
  out << "first run: L(4) = " << b.first_run_steps << " steps, labels " << b.first_run_start_label << " -> "
      << b.first_run_end_label << '\n';
  out << "restart: two-leg tree at label " << b.restart_label << ", legs of depth " << b.restart_depth << " ("
      << b.restart_depth + 1 << " vertices each)\n";
  const LegSimState narrow{b.restart_label, 1, b.restart_depth, b.restart_depth};
  out << "  simulated from legs of " << b.restart_depth << " vertices instead: "
      << simulate_leg_elimination(narrow).steps << " steps\n";
  out << "second run: L(" << b.restart_depth << ") = " << b.restart_steps << " steps, labels "
      << b.restart_label << " -> " << b.restart_end_label << '\n';
  out << "chain countdown: Chain(" << b.chain_start << ") at label " << b.chain_start
      << " down to Chain(1) at label " << b.last_label << '\n';
  out << "length = " << b.last_label << " - " << kLabelOffset << " = " << b.bound << '\n';
  out << "3*2^48 - 8 = " << (3 * pow2(48) - 8) << '\n';
  out << b.bound << '\n';
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const ExtendedCount depth = parse_count(o.depth);
  const LegSimState initial{parse_count(o.label), parse_count(o.stem), depth, depth};
  const LegSimulation sim = simulate_leg_elimination(initial, parse_count(o.stop));
  if (json_out(o)) {
    out << json(sim).dump(2) << '\n';
    return kExitOk;
  }
  out << "kind\tlabel\tstem\tleft\tright\tsize\n";
  for (const auto& row : sim.rows) {
    const auto& s = row.state;
    out << to_string(row.kind) << '\t' << s.label << '\t' << s.stem << '\t' << s.left << '\t' << s.right
        << '\t' << s.size() << '\n';
  }
  out << "steps: " << sim.steps << '\n';
  return kExitOk;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const TreeDescriptor d = parse_argument(o.tree_a);
  if (d.kind() == DescriptorKind::Explicit) {
    out << to_dot(d.tree());
  } else {
    out << descriptor_to_dot(d);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Inf-embedding checker and weak tree function toolkit", "weaktree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "Worker threads for pairwise verification (0 = all cores)");

  auto* embed = app.add_subcommand("embed", "Decide whether TREE1 inf-embeds into TREE2");
  embed->add_option("tree1", o.tree_a, "Parenthesis code or descriptor")->required();
  embed->add_option("tree2", o.tree_b, "Parenthesis code or descriptor")->required();
  embed->add_flag("--witness", o.witness, "Print the vertex mapping");

  auto* gen = app.add_subcommand("gen", "Stream sequence records");
  gen->add_option("--from", o.from, "First position");
  gen->add_option("--to", o.to, "Last position")->required();
  gen->add_flag("--force", o.force, "Allow more than 10^6 records");

  auto* verify = app.add_subcommand("verify", "Verify the construction");
  verify->add_option("--prefix", o.prefix, "Explicitly check positions 1..COUNT");
  verify->add_flag("--symbolic", o.symbolic, "Family-level audit of the whole sequence");
  verify->add_option("--cross", o.cross, "Cross-validate all positions with at most LIMIT vertices");

  auto* search = app.add_subcommand("search", "Longest bad sequence search");
  search->add_option("--n", o.n, "Slack parameter")->required();
  search->add_option("--step-cap", o.step_cap, "Maximum sequence length explored");
  search->add_option("--size-cap", o.size_cap, "Maximum tree size explored");
  search->add_option("--node-budget", o.node_budget, "Maximum search nodes");

  auto* bound = app.add_subcommand("bound", "Leg elimination length or the full bound");
  bound->add_option("--x", o.x, "Leg depth");

  auto* simulate = app.add_subcommand("simulate", "Leg elimination checkpoint table");
  simulate->add_option("--stem", o.stem, "Stem vertices")->required();
  simulate->add_option("--depth", o.depth, "Vertices in each leg")->required();
  simulate->add_option("--label", o.label, "Label of the starting tree")->required();
  simulate->add_option("--stop", o.stop, "Leg length at which the run stops");

  auto* dot = app.add_subcommand("export-dot", "Render a tree in DOT");
  dot->add_option("tree", o.tree_a, "Parenthesis code or descriptor")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (embed->parsed()) return cmd_embed(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (bound->parsed()) return cmd_bound(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (dot->parsed()) return cmd_export_dot(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "internal error: no subcommand ran\n";
  return kExitInternal;
}

}  // namespace weaktree::cli
