#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weaktree {

/// Preorder index of a vertex inside one specific RootedTree.
struct VertexId {
  std::size_t index = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Immutable unordered rooted tree stored in canonical form.
///
/// Children are ordered by descending canonical code, so two trees compare
/// equal exactly when they are isomorphic. Vertices are addressed by preorder
/// index of the canonical layout; vertex 0 is the root. Size, height, depth,
/// subtree sizes and leaf counts are computed once at construction.
class RootedTree {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  /// The one-vertex tree.
  RootedTree();

  static RootedTree single_vertex() { return RootedTree(); }
  static RootedTree chain(std::size_t vertices);
  static RootedTree from_children(std::vector<RootedTree> children);

  /// Builds a tree from a parent array (parents[root] == npos, exactly one
  /// root). Child order in the input is irrelevant.
  static RootedTree from_parents(std::span<const std::size_t> parents);

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t height() const noexcept { return height_[0]; }
  std::size_t leaf_count() const noexcept { return leaves_[0]; }

  /// Balanced-parenthesis canonical code, length 2 * size().
  const std::string& code() const noexcept { return code_; }

  std::size_t parent(std::size_t v) const { return parent_[v]; }
  std::span<const std::size_t> children(std::size_t v) const {
    return {child_list_.data() + child_begin_[v], child_begin_[v + 1] - child_begin_[v]};
  }
  std::size_t depth(std::size_t v) const { return depth_[v]; }
  std::size_t subtree_size(std::size_t v) const { return subtree_size_[v]; }
  std::size_t subtree_height(std::size_t v) const { return height_[v]; }
  std::size_t subtree_leaves(std::size_t v) const { return leaves_[v]; }

  /// True when u lies on the root path of v (u == v included).
  bool is_ancestor(std::size_t u, std::size_t v) const {
    return u <= v && v < u + subtree_size_[u];
  }

  /// Child subtrees of the root, in canonical order.
  std::vector<RootedTree> root_children() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.code_ == b.code_; }
  friend auto operator<=>(const RootedTree& a, const RootedTree& b) { return a.code_ <=> b.code_; }

 private:
  struct FromCanonical {};
  RootedTree(FromCanonical, std::string canonical_code);

  std::string code_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> child_begin_;
  std::vector<std::size_t> child_list_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> subtree_size_;
  std::vector<std::size_t> height_;
  std::vector<std::size_t> leaves_;
};

/// Parses balanced-parenthesis text ("(" and ")" only) into its canonical tree.
/// Throws ParseError with a byte offset on malformed input.
RootedTree parse_tree(std::string_view text);

inline const std::string& serialize_tree(const RootedTree& t) { return t.code(); }

inline std::size_t leaf_count(const RootedTree& t) { return t.leaf_count(); }

/// Least common ancestor (infimum). Throws InputError for out-of-range ids.
VertexId lca(const RootedTree& t, VertexId u, VertexId v);

inline constexpr std::size_t kEnumerationCap = 12;

/// Canonical codes of all rooted trees with exactly `vertices` vertices, sorted.
std::vector<std::string> enumerate_rooted_trees(std::size_t vertices,
                                                std::size_t cap = kEnumerationCap);

/// Graphviz rendering: filled black circles, edges parent -> child, root first.
std::string to_dot(const RootedTree& t);

}  // namespace weaktree
