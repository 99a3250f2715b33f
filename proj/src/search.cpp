#include "weaktree/search.hpp"

#include "weaktree/embedding.hpp"
#include "weaktree/errors.hpp"
#include "weaktree/tree.hpp"

#include <algorithm>
#include <optional>

namespace weaktree {

std::size_t default_size_cap(unsigned n) { return std::min<std::size_t>(kEnumerationCap, n + 5); }

namespace {

using Bits = std::vector<std::uint64_t>;

class Search {
 public:
  Search(unsigned n, std::size_t step_cap, std::size_t size_cap, std::uint64_t node_budget)
      : n_(n), step_cap_(step_cap), size_cap_(size_cap), node_budget_(node_budget) {
    // Larger trees first, ascending code within a size.
    for (std::size_t s = size_cap; s >= 1; --s) {
      for (const auto& code : enumerate_rooted_trees(s)) pool_.push_back(parse_tree(code));
    }
    words_ = (pool_.size() + 63) / 64;
    rows_.resize(pool_.size());
    single_vertex_ = pool_.size() - 1;
  }

  SearchResult run() {
    Bits all(words_, 0);
    for (std::size_t i = 0; i < pool_.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    dfs(all);

    SearchResult r;
    r.n = n_;
    r.length = best_.size();
    for (std::size_t i : best_) r.witness.push_back(pool_[i].code());
    r.step_cap = step_cap_;
    r.size_cap = size_cap_;
    r.node_budget = node_budget_;
    r.nodes = nodes_;
    if (cut_step_) r.cuts.push_back("step_cap");
    if (cut_size_) r.cuts.push_back("size_cap");
    if (cut_budget_) r.cuts.push_back("node_budget");
    r.exhausted = r.cuts.empty();
    return r;
  }

 private:
  static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

  // Bitset of pool trees into which pool_[c] inf-embeds.
  const Bits& row(std::size_t c) {
    if (!rows_[c]) {
      Bits bits(words_, 0);
      const RootedTree& t = pool_[c];
      for (std::size_t x = 0; x < pool_.size(); ++x) {
        const RootedTree& u = pool_[x];
        if (u.size() < t.size() || u.height() < t.height() || u.leaf_count() < t.leaf_count()) continue;
        if (checker_.embeds(t, u)) bits[x / 64] |= std::uint64_t{1} << (x % 64);
      }
      rows_[c] = std::move(bits);
    }
    return *rows_[c];
  }

  void dfs(const Bits& admissible) {
    if (++nodes_ > node_budget_) {
      cut_budget_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    // A single vertex inf-embeds into every tree, so nothing can follow it.
    if (!chosen_.empty() && chosen_.back() == single_vertex_) return;

    const std::size_t budget = chosen_.size() + 1 + n_;
    const std::size_t allowed = std::min(budget, size_cap_);
    auto any_of_size_at_most = [&](std::size_t size) {
      for (std::size_t i = 0; i < pool_.size(); ++i) {
        if (pool_[i].size() <= size && test(admissible, i)) return true;
      }
      return false;
    };
    if (chosen_.size() == step_cap_) {
      if (any_of_size_at_most(allowed)) cut_step_ = true;
      return;
    }
    if (budget > size_cap_) {
      for (std::size_t i = 0; i < pool_.size() && pool_[i].size() == size_cap_; ++i) {
        if (test(admissible, i)) {
          cut_size_ = true;
          break;
        }
      }
    }

    for (std::size_t c = 0; c < pool_.size(); ++c) {
      if (pool_[c].size() > allowed || !test(admissible, c)) continue;
      const Bits& excluded = row(c);
      Bits next(words_);
      for (std::size_t w = 0; w < words_; ++w) next[w] = admissible[w] & ~excluded[w];
      chosen_.push_back(c);
      dfs(next);
      chosen_.pop_back();
      if (cut_budget_) return;
    }
  }

  unsigned n_;
  std::size_t step_cap_;
  std::size_t size_cap_;
  std::uint64_t node_budget_;
  std::vector<RootedTree> pool_;
  std::size_t words_ = 0;
  std::size_t single_vertex_ = 0;
  std::vector<std::optional<Bits>> rows_;
  InfEmbeddingChecker checker_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool cut_step_ = false;
  bool cut_size_ = false;
  bool cut_budget_ = false;
};

}  // namespace

SearchResult longest_bad_sequence(unsigned n, std::size_t step_cap, std::size_t size_cap,
                                  std::uint64_t node_budget) {
  if (n > 3) throw InputError("search supports n <= 3");
  if (step_cap == 0) throw InputError("step cap must be at least 1");
  if (size_cap == 0) throw InputError("size cap must be at least 1");
  if (size_cap > kEnumerationCap) {
    throw CapacityError("size cap " + std::to_string(size_cap) + " exceeds the enumeration cap of " +
                        std::to_string(kEnumerationCap));
  }
  if (node_budget == 0) throw InputError("node budget must be at least 1");
  return Search(n, step_cap, size_cap, node_budget).run();
}

}  // namespace weaktree
