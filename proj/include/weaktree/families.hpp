#pragma once

#include "weaktree/count.hpp"
#include "weaktree/tree.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

namespace weaktree {

/// A rooted path of `length` vertices.
struct Chain {
  ExtendedCount length;

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// A stem path of `stem` vertices whose last vertex carries two chains.
/// Legs are unordered; `left >= right` always holds after construction.
struct TwoLeg {
  ExtendedCount stem;
  ExtendedCount left;
  ExtendedCount right;

  friend bool operator==(const TwoLeg&, const TwoLeg&) = default;
};

enum class DescriptorKind { Explicit, Chain, TwoLeg };

/// Symbolic name for a tree that may be far too large to materialize.
class TreeDescriptor {
 public:
  static TreeDescriptor explicit_tree(RootedTree tree);
  static TreeDescriptor chain(ExtendedCount length);
  static TreeDescriptor two_leg(ExtendedCount stem, ExtendedCount left, ExtendedCount right);

  /// "chain:<n>", "twoleg:<s>:<l>:<r>" or "explicit:<code>".
  static TreeDescriptor parse(std::string_view text);

  DescriptorKind kind() const;
  const RootedTree& tree() const { return std::get<RootedTree>(value_); }
  const Chain& as_chain() const { return std::get<Chain>(value_); }
  const TwoLeg& as_two_leg() const { return std::get<TwoLeg>(value_); }

  std::string to_string() const;

  friend bool operator==(const TreeDescriptor&, const TreeDescriptor&) = default;

 private:
  explicit TreeDescriptor(std::variant<RootedTree, Chain, TwoLeg> value) : value_(std::move(value)) {}

  std::variant<RootedTree, Chain, TwoLeg> value_;
};

ExtendedCount desc_size(const TreeDescriptor& d);
ExtendedCount desc_height(const TreeDescriptor& d);
ExtendedCount desc_leaf_count(const TreeDescriptor& d);

inline constexpr std::size_t kDefaultExpandLimit = 4096;

/// Materializes the denoted tree. Throws CapacityError if it exceeds `limit` vertices.
RootedTree expand(const TreeDescriptor& d, std::size_t limit = kDefaultExpandLimit);

/// Rewrites explicit trees with one leaf as Chain and with two leaves as TwoLeg.
TreeDescriptor normalize(const TreeDescriptor& d);

/// Inf-embedding between descriptors, using closed forms for the chain and
/// two-leg families and the explicit checker only for explicit targets.
/// Throws CapacityError when both sides are explicit and one exceeds `limit`.
bool family_embeds(const TreeDescriptor& source, const TreeDescriptor& target,
                   std::size_t limit = kDefaultExpandLimit);

/// DOT rendering of a descriptor. Chains longer than `dotted_threshold`
/// vertices are drawn as one dotted edge labelled with the vertex count.
std::string descriptor_to_dot(const TreeDescriptor& d, std::size_t dotted_threshold = 6);

}  // namespace weaktree
