#include "weaktree/serialize.hpp"

#include "weaktree/errors.hpp"

#include <array>
#include <utility>

namespace weaktree {

using nlohmann::json;

namespace {

template <typename E, std::size_t N>
E parse_enum(const std::string& text, const std::array<E, N>& values, const char* what) {
  for (E v : values) {
    if (to_string(v) == text) return v;
  }
  throw ParseError(std::string("unknown ") + what + " '" + text + "'", 0);
}

}  // namespace

std::string to_string(LegRowKind kind) {
  switch (kind) {
    case LegRowKind::Start: return "start";
    case LegRowKind::Extension: return "extension";
    case LegRowKind::Symmetric: return "symmetric";
  }
  return "unknown";
}

VerificationMode parse_verification_mode(const std::string& text) {
  return parse_enum(text, std::array{VerificationMode::Explicit, VerificationMode::Symbolic,
                                     VerificationMode::Mixed},
                    "verification mode");
}

Verdict parse_verdict(const std::string& text) {
  return parse_enum(text, std::array{Verdict::Valid, Verdict::Invalid, Verdict::Inconclusive},
                    "verdict");
}

ClassOutcome parse_class_outcome(const std::string& text) {
  return parse_enum(text,
                    std::array{ClassOutcome::Clean, ClassOutcome::Violated, ClassOutcome::Unresolved},
                    "class outcome");
}

LegRowKind parse_leg_row_kind(const std::string& text) {
  return parse_enum(text, std::array{LegRowKind::Start, LegRowKind::Extension, LegRowKind::Symmetric},
                    "row kind");
}

void to_json(json& j, const EmbeddingWitness& w) {
  json pairs = json::array();
  for (const auto& [s, t] : w.mapping) pairs.push_back({s.index, t.index});
  j = json{{"mapping", pairs}};
}

void from_json(const json& j, EmbeddingWitness& w) {
  w.mapping.clear();
  for (const auto& p : j.at("mapping")) {
    w.mapping.emplace_back(VertexId{p.at(0).get<std::size_t>()}, VertexId{p.at(1).get<std::size_t>()});
  }
}

void to_json(json& j, const BudgetViolation& v) {
  j = json{{"position", v.position}, {"size", v.size}, {"budget", v.budget}};
}

void from_json(const json& j, BudgetViolation& v) {
  j.at("position").get_to(v.position);
  j.at("size").get_to(v.size);
  j.at("budget").get_to(v.budget);
}

void to_json(json& j, const EmbeddingViolation& v) {
  j = json{{"earlier", v.earlier}, {"later", v.later}, {"family_pair", v.family_pair}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
}

void from_json(const json& j, EmbeddingViolation& v) {
  j.at("earlier").get_to(v.earlier);
  j.at("later").get_to(v.later);
  j.at("family_pair").get_to(v.family_pair);
  const json& w = j.at("witness");
  v.witness = w.is_null() ? std::nullopt : std::optional<EmbeddingWitness>(w.get<EmbeddingWitness>());
}

void to_json(json& j, const PairClassReport& c) {
  j = json{{"earlier_phase", c.earlier_phase}, {"later_phase", c.later_phase},
           {"name", c.name},                   {"rule", c.rule},
           {"pairs", c.pairs},                 {"outcome", to_string(c.outcome)},
           {"detail", c.detail}};
}

void from_json(const json& j, PairClassReport& c) {
  j.at("earlier_phase").get_to(c.earlier_phase);
  j.at("later_phase").get_to(c.later_phase);
  j.at("name").get_to(c.name);
  j.at("rule").get_to(c.rule);
  j.at("pairs").get_to(c.pairs);
  c.outcome = parse_class_outcome(j.at("outcome").get<std::string>());
  j.at("detail").get_to(c.detail);
}

void to_json(json& j, const Disagreement& d) {
  j = json{{"earlier", d.earlier},
           {"later", d.later},
           {"explicit_embeds", d.explicit_embeds},
           {"symbolic_embeds", d.symbolic_embeds}};
}

void from_json(const json& j, Disagreement& d) {
  j.at("earlier").get_to(d.earlier);
  j.at("later").get_to(d.later);
  j.at("explicit_embeds").get_to(d.explicit_embeds);
  j.at("symbolic_embeds").get_to(d.symbolic_embeds);
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"checked_pairs", r.checked_pairs},
           {"budget_violations", r.budget_violations},
           {"embedding_violations", r.embedding_violations},
           {"mode", to_string(r.mode)},
           {"verdict", to_string(r.verdict)},
           {"pair_classes", r.pair_classes},
           {"disagreements", r.disagreements}};
}

void from_json(const json& j, VerificationReport& r) {
  j.at("checked_pairs").get_to(r.checked_pairs);
  j.at("budget_violations").get_to(r.budget_violations);
  j.at("embedding_violations").get_to(r.embedding_violations);
  r.mode = parse_verification_mode(j.at("mode").get<std::string>());
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  j.at("pair_classes").get_to(r.pair_classes);
  j.at("disagreements").get_to(r.disagreements);
}

void to_json(json& j, const SearchResult& r) {
  j = json{{"n", r.n},
           {"length", r.length},
           {"witness", r.witness},
           {"exhausted", r.exhausted},
           {"step_cap", r.step_cap},
           {"size_cap", r.size_cap},
           {"node_budget", r.node_budget},
           {"nodes", r.nodes},
           {"cuts", r.cuts}};
}

void from_json(const json& j, SearchResult& r) {
  j.at("n").get_to(r.n);
  j.at("length").get_to(r.length);
  j.at("witness").get_to(r.witness);
  j.at("exhausted").get_to(r.exhausted);
  j.at("step_cap").get_to(r.step_cap);
  j.at("size_cap").get_to(r.size_cap);
  j.at("node_budget").get_to(r.node_budget);
  j.at("nodes").get_to(r.nodes);
  j.at("cuts").get_to(r.cuts);
}

void to_json(json& j, const LegSimState& s) {
  j = json{{"label", s.label}, {"stem", s.stem}, {"left", s.left}, {"right", s.right}};
}

void from_json(const json& j, LegSimState& s) {
  j.at("label").get_to(s.label);
  j.at("stem").get_to(s.stem);
  j.at("left").get_to(s.left);
  j.at("right").get_to(s.right);
}

void to_json(json& j, const LegSimRow& r) { j = json{{"kind", to_string(r.kind)}, {"state", r.state}}; }

void from_json(const json& j, LegSimRow& r) {
  r.kind = parse_leg_row_kind(j.at("kind").get<std::string>());
  j.at("state").get_to(r.state);
}

void to_json(json& j, const LegSimulation& s) { j = json{{"rows", s.rows}, {"steps", s.steps}}; }

void from_json(const json& j, LegSimulation& s) {
  j.at("rows").get_to(s.rows);
  j.at("steps").get_to(s.steps);
}

void to_json(json& j, const BoundDerivation& b) {
  j = json{{"first_run_start_label", b.first_run_start_label},
           {"first_run_steps", b.first_run_steps},
           {"first_run_end_label", b.first_run_end_label},
           {"restart_label", b.restart_label},
           {"restart_depth", b.restart_depth},
           {"restart_steps", b.restart_steps},
           {"restart_end_label", b.restart_end_label},
           {"chain_start", b.chain_start},
           {"last_label", b.last_label},
           {"bound", b.bound}};
}

void from_json(const json& j, BoundDerivation& b) {
  j.at("first_run_start_label").get_to(b.first_run_start_label);
  j.at("first_run_steps").get_to(b.first_run_steps);
  j.at("first_run_end_label").get_to(b.first_run_end_label);
  j.at("restart_label").get_to(b.restart_label);
  j.at("restart_depth").get_to(b.restart_depth);
  j.at("restart_steps").get_to(b.restart_steps);
  j.at("restart_end_label").get_to(b.restart_end_label);
  j.at("chain_start").get_to(b.chain_start);
  j.at("last_label").get_to(b.last_label);
  j.at("bound").get_to(b.bound);
}

void to_json(json& j, const EmbedAnswer& a) {
  j = json{{"source", a.source}, {"target", a.target}, {"embeds", a.embeds}};
  j["witness"] = a.witness ? json(*a.witness) : json(nullptr);
}

void from_json(const json& j, EmbedAnswer& a) {
  j.at("source").get_to(a.source);
  j.at("target").get_to(a.target);
  j.at("embeds").get_to(a.embeds);
  const json& w = j.at("witness");
  a.witness = w.is_null() ? std::nullopt : std::optional<EmbeddingWitness>(w.get<EmbeddingWitness>());
}

}  // namespace weaktree
