#pragma once

#include "weaktree/construction.hpp"
#include "weaktree/count.hpp"
#include "weaktree/embedding.hpp"
#include "weaktree/families.hpp"
#include "weaktree/search.hpp"
#include "weaktree/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace weaktree {

/// One line of a sequence export.
struct SequenceRecord {
  ExtendedCount position;
  ExtendedCount label;
  TreeDescriptor descriptor;

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

/// Answer to a single embedding query.
struct EmbedAnswer {
  std::string source;
  std::string target;
  bool embeds = false;
  std::optional<EmbeddingWitness> witness;

  friend bool operator==(const EmbedAnswer&, const EmbedAnswer&) = default;
};

VerificationMode parse_verification_mode(const std::string& text);
Verdict parse_verdict(const std::string& text);
ClassOutcome parse_class_outcome(const std::string& text);
LegRowKind parse_leg_row_kind(const std::string& text);
std::string to_string(LegRowKind kind);

void to_json(nlohmann::json& j, const EmbeddingWitness& w);
void from_json(const nlohmann::json& j, EmbeddingWitness& w);
void to_json(nlohmann::json& j, const BudgetViolation& v);
void from_json(const nlohmann::json& j, BudgetViolation& v);
void to_json(nlohmann::json& j, const EmbeddingViolation& v);
void from_json(const nlohmann::json& j, EmbeddingViolation& v);
void to_json(nlohmann::json& j, const PairClassReport& c);
void from_json(const nlohmann::json& j, PairClassReport& c);
void to_json(nlohmann::json& j, const Disagreement& d);
void from_json(const nlohmann::json& j, Disagreement& d);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);
void to_json(nlohmann::json& j, const SearchResult& r);
void from_json(const nlohmann::json& j, SearchResult& r);
void to_json(nlohmann::json& j, const LegSimState& s);
void from_json(const nlohmann::json& j, LegSimState& s);
void to_json(nlohmann::json& j, const LegSimRow& r);
void from_json(const nlohmann::json& j, LegSimRow& r);
void to_json(nlohmann::json& j, const LegSimulation& s);
void from_json(const nlohmann::json& j, LegSimulation& s);
void to_json(nlohmann::json& j, const BoundDerivation& b);
void from_json(const nlohmann::json& j, BoundDerivation& b);
void to_json(nlohmann::json& j, const EmbedAnswer& a);
void from_json(const nlohmann::json& j, EmbedAnswer& a);

}  // namespace weaktree

namespace nlohmann {

/// Exact integers travel as decimal strings.
template <>
struct adl_serializer<weaktree::ExtendedCount> {
  static void to_json(json& j, const weaktree::ExtendedCount& v) { j = weaktree::to_string(v); }
  static void from_json(const json& j, weaktree::ExtendedCount& v) {
    v = weaktree::parse_count(j.get<std::string>());
  }
};

/// Descriptors use their text syntax.
template <>
struct adl_serializer<weaktree::TreeDescriptor> {
  static void to_json(json& j, const weaktree::TreeDescriptor& d) { j = d.to_string(); }
  static weaktree::TreeDescriptor from_json(const json& j) {
    return weaktree::TreeDescriptor::parse(j.get<std::string>());
  }
};

template <>
struct adl_serializer<weaktree::SequenceRecord> {
  static void to_json(json& j, const weaktree::SequenceRecord& r) {
    j = json{{"position", r.position}, {"label", r.label}, {"descriptor", r.descriptor}};
  }
  static weaktree::SequenceRecord from_json(const json& j) {
    return {j.at("position").get<weaktree::ExtendedCount>(), j.at("label").get<weaktree::ExtendedCount>(),
            j.at("descriptor").get<weaktree::TreeDescriptor>()};
  }
};

}  // namespace nlohmann
