#pragma once

#include "weaktree/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace weaktree {

/// An explicit inf-embedding: one (source, target) pair per source vertex,
/// sorted by source preorder index.
struct EmbeddingWitness {
  std::vector<std::pair<VertexId, VertexId>> mapping;

  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

/// Result of replaying a witness against the literal definition.
struct WitnessCheck {
  bool total = false;                  // every source vertex mapped exactly once
  bool injective = false;
  bool descendant_preserving = false;  // condition (i)
  bool infimum_preserving = false;     // condition (ii)

  bool ok() const { return total && injective && descendant_preserving && infimum_preserving; }
};

WitnessCheck check_witness(const RootedTree& source, const RootedTree& target,
                           const EmbeddingWitness& witness);

/// Decides source <= target with a memoized dynamic program over vertex pairs.
///
/// D(u, v) holds when the subtree at u embeds with u sent to v: the children
/// of u must be matched injectively to distinct children of v such that each
/// child embeds somewhere inside its partner's subtree. The child assignment
/// is a bipartite matching solved with augmenting paths. The memo is reset at
/// the start of every query; reusing one checker only reuses its buffers.
class InfEmbeddingChecker {
 public:
  bool embeds(const RootedTree& source, const RootedTree& target);

  /// Witness with deterministic tie-breaking (smallest target preorder first).
  std::optional<EmbeddingWitness> witness(const RootedTree& source, const RootedTree& target);

  /// Witness sending the source root to `root_image`, if one exists.
  std::optional<EmbeddingWitness> witness_at(const RootedTree& source, const RootedTree& target,
                                             VertexId root_image);

 private:
  void reset(const RootedTree& source, const RootedTree& target);
  bool rooted(std::size_t u, std::size_t v);   // D(u, v)
  bool inside(std::size_t u, std::size_t w);   // exists x in subtree(w) with D(u, x)
  bool quick_reject(std::size_t u, std::size_t v) const;
  // Maximum matching of children(u) into children(v); returns the partner of
  // each child of u (or npos) and whether every child was matched.
  bool match_children(std::size_t u, std::size_t v, std::vector<std::size_t>* partner);
  void extract(std::size_t u, std::size_t v, EmbeddingWitness& out);

  const RootedTree* source_ = nullptr;
  const RootedTree* target_ = nullptr;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> rooted_stamp_;
  std::vector<std::uint32_t> inside_stamp_;
  std::vector<std::uint8_t> rooted_value_;
  std::vector<std::uint8_t> inside_value_;
};

bool inf_embeds(const RootedTree& source, const RootedTree& target);
std::optional<EmbeddingWitness> inf_embeds_witness(const RootedTree& source,
                                                   const RootedTree& target);

inline constexpr std::size_t kBruteForceSourceCap = 8;
inline constexpr std::size_t kBruteForceTargetCap = 9;

/// Reference oracle: tries injective vertex maps and checks conditions (i)
/// and (ii) literally from ancestor sets. Throws CapacityError above the caps.
bool brute_force_inf_embeds(const RootedTree& source, const RootedTree& target);

}  // namespace weaktree
