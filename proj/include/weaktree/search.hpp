#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace weaktree {

struct SearchResult {
  unsigned n = 0;
  std::size_t length = 0;
  std::vector<std::string> witness;  // canonical codes, position 1 first
  bool exhausted = false;            // length is exact under the caps below
  std::size_t step_cap = 0;
  std::size_t size_cap = 0;
  std::uint64_t node_budget = 0;
  std::uint64_t nodes = 0;
  std::vector<std::string> cuts;     // which caps pruned a live branch

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000;

/// Default per-step size cap for a slack of n.
std::size_t default_size_cap(unsigned n);

/// Depth-first search for the longest bad sequence with budget k + n.
///
/// Candidates at step k are all trees with at most min(k + n, size_cap)
/// vertices into which no earlier member inf-embeds, explored larger trees
/// first and in ascending code order within a size. The first longest
/// sequence found is returned.
///
/// Exhaustiveness: the set of trees avoiding a fixed set of earlier members
/// is closed under deleting a leaf (the smaller tree embeds into the larger),
/// so if no admissible tree has exactly size_cap vertices, none has more.
/// A branch counts as cut by the size cap only when an admissible tree of
/// size_cap vertices exists while the budget allows more. A branch is cut
/// by the step cap when it reaches step_cap members and could still grow,
/// and by the node budget when exploration stops early.
///
/// Throws InputError for n > 3 or step_cap == 0, CapacityError when
/// size_cap exceeds the enumeration cap.
SearchResult longest_bad_sequence(unsigned n, std::size_t step_cap, std::size_t size_cap,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace weaktree
