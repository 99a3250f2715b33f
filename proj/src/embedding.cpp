#include "weaktree/embedding.hpp"

#include "weaktree/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace weaktree {

namespace {

constexpr std::size_t npos = RootedTree::npos;

// Ancestor relation and infima computed from parent pointers only, so that
// the oracle and the witness replay do not share code with the DP.
struct LiteralRelations {
  std::size_t n = 0;
  std::vector<std::uint8_t> ancestor;  // ancestor[u * n + v]: u on the root path of v
  std::vector<std::size_t> infimum;    // infimum[u * n + v]

  explicit LiteralRelations(const RootedTree& t) : n(t.size()) {
    ancestor.assign(n * n, 0);
    infimum.assign(n * n, 0);
    std::vector<std::vector<std::size_t>> path(n);  // root ... v
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = v; w != npos; w = t.parent(w)) {
        path[v].push_back(w);
        ancestor[w * n + v] = 1;
      }
      std::reverse(path[v].begin(), path[v].end());
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        // Deepest vertex shared by both root paths.
        std::size_t k = 0;
        while (k + 1 < path[u].size() && k + 1 < path[v].size() &&
               path[u][k + 1] == path[v][k + 1]) {
          ++k;
        }
        infimum[u * n + v] = path[u][k];
      }
    }
  }

  bool is_ancestor(std::size_t u, std::size_t v) const { return ancestor[u * n + v] != 0; }
  std::size_t inf(std::size_t u, std::size_t v) const { return infimum[u * n + v]; }
};

}  // namespace

WitnessCheck check_witness(const RootedTree& source, const RootedTree& target,
                           const EmbeddingWitness& witness) {
  WitnessCheck result;
  const std::size_t n1 = source.size();
  std::vector<std::size_t> image(n1, npos);
  result.total = witness.mapping.size() == n1;
  for (const auto& [from, to] : witness.mapping) {
    if (from.index >= n1 || to.index >= target.size() || image[from.index] != npos) {
      result.total = false;
      return result;
    }
    image[from.index] = to.index;
  }
  if (!result.total) return result;

  std::vector<std::size_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  result.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  const LiteralRelations rel1(source);
  const LiteralRelations rel2(target);
  result.descendant_preserving = true;
  result.infimum_preserving = true;
  for (std::size_t u = 0; u < n1; ++u) {
    for (std::size_t v = 0; v < n1; ++v) {
      if (rel1.is_ancestor(u, v) && !rel2.is_ancestor(image[u], image[v])) {
        result.descendant_preserving = false;
      }
      if (image[rel1.inf(u, v)] != rel2.inf(image[u], image[v])) {
        result.infimum_preserving = false;
      }
    }
  }
  return result;
}

void InfEmbeddingChecker::reset(const RootedTree& source, const RootedTree& target) {
  source_ = &source;
  target_ = &target;
  const std::size_t cells = source.size() * target.size();
  if (rooted_stamp_.size() < cells) {
    rooted_stamp_.assign(cells, 0);
    inside_stamp_.assign(cells, 0);
    rooted_value_.assign(cells, 0);
    inside_value_.assign(cells, 0);
    epoch_ = 0;
  }
  if (++epoch_ == 0) {
    std::fill(rooted_stamp_.begin(), rooted_stamp_.end(), 0);
    std::fill(inside_stamp_.begin(), inside_stamp_.end(), 0);
    epoch_ = 1;
  }
}

bool InfEmbeddingChecker::quick_reject(std::size_t u, std::size_t v) const {
  const RootedTree& s = *source_;
  const RootedTree& t = *target_;
  return s.subtree_size(u) > t.subtree_size(v) || s.subtree_height(u) > t.subtree_height(v) ||
         s.subtree_leaves(u) > t.subtree_leaves(v);
}

bool InfEmbeddingChecker::match_children(std::size_t u, std::size_t v,
                                         std::vector<std::size_t>* partner) {
  const auto from = source_->children(u);
  const auto to = target_->children(v);
  if (from.size() > to.size()) return false;

  std::vector<std::vector<std::size_t>> adj(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (inside(from[i], to[j])) adj[i].push_back(j);
    }
    if (adj[i].empty()) return false;
  }

  std::vector<std::size_t> owner(to.size(), npos);
  std::vector<std::uint8_t> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    // Free partners first, so earlier children keep the smallest targets.
    for (std::size_t j : adj[i]) {
      if (!seen[j] && owner[j] == npos) {
        seen[j] = 1;
        owner[j] = i;
        return true;
      }
    }
    for (std::size_t j : adj[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (owner[j] == npos || augment(owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < from.size(); ++i) {
    seen.assign(to.size(), 0);
    if (!augment(i)) return false;
  }
  if (partner != nullptr) {
    partner->assign(from.size(), npos);
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (owner[j] != npos) (*partner)[owner[j]] = to[j];
    }
  }
  return true;
}

bool InfEmbeddingChecker::rooted(std::size_t u, std::size_t v) {
  const std::size_t key = u * target_->size() + v;
  if (rooted_stamp_[key] == epoch_) return rooted_value_[key] != 0;
  bool result;
  if (quick_reject(u, v) || source_->children(u).size() > target_->children(v).size()) {
    result = false;
  } else if (source_->children(u).empty()) {
    result = true;
  } else {
    result = match_children(u, v, nullptr);
  }
  rooted_stamp_[key] = epoch_;
  rooted_value_[key] = result ? 1 : 0;
  return result;
}

bool InfEmbeddingChecker::inside(std::size_t u, std::size_t w) {
  const std::size_t key = u * target_->size() + w;
  if (inside_stamp_[key] == epoch_) return inside_value_[key] != 0;
  bool result = false;
  if (!quick_reject(u, w)) {
    result = rooted(u, w);
    for (std::size_t c : target_->children(w)) {
      if (result) break;
      result = inside(u, c);
    }
  }
  inside_stamp_[key] = epoch_;
  inside_value_[key] = result ? 1 : 0;
  return result;
}

bool InfEmbeddingChecker::embeds(const RootedTree& source, const RootedTree& target) {
  reset(source, target);
  return inside(0, 0);
}

void InfEmbeddingChecker::extract(std::size_t u, std::size_t v, EmbeddingWitness& out) {
  out.mapping.emplace_back(VertexId{u}, VertexId{v});
  if (source_->children(u).empty()) return;
  std::vector<std::size_t> partner;
  match_children(u, v, &partner);
  const auto kids = source_->children(u);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const std::size_t top = partner[i];
    // Smallest preorder vertex inside the partner subtree that hosts the child.
    for (std::size_t x = top; x < top + target_->subtree_size(top); ++x) {
      if (rooted(kids[i], x)) {
        extract(kids[i], x, out);
        break;
      }
    }
  }
}

std::optional<EmbeddingWitness> InfEmbeddingChecker::witness(const RootedTree& source,
                                                             const RootedTree& target) {
  reset(source, target);
  if (!inside(0, 0)) return std::nullopt;
  EmbeddingWitness out;
  for (std::size_t w = 0; w < target.size(); ++w) {
    if (rooted(0, w)) {
      extract(0, w, out);
      break;
    }
  }
  std::sort(out.mapping.begin(), out.mapping.end());
  return out;
}

bool inf_embeds(const RootedTree& source, const RootedTree& target) {
  InfEmbeddingChecker checker;
  return checker.embeds(source, target);
}

std::optional<EmbeddingWitness> InfEmbeddingChecker::witness_at(const RootedTree& source,
                                                                const RootedTree& target,
                                                                VertexId root_image) {
  if (root_image.index >= target.size()) throw InputError("root image out of range");
  reset(source, target);
  if (!rooted(0, root_image.index)) return std::nullopt;
  EmbeddingWitness out;
  extract(0, root_image.index, out);
  std::sort(out.mapping.begin(), out.mapping.end());
  return out;
}

std::optional<EmbeddingWitness> inf_embeds_witness(const RootedTree& source,
                                                   const RootedTree& target) {
  InfEmbeddingChecker checker;
  return checker.witness(source, target);
}

bool brute_force_inf_embeds(const RootedTree& source, const RootedTree& target) {
  if (source.size() > kBruteForceSourceCap || target.size() > kBruteForceTargetCap) {
    throw CapacityError("brute-force embedding is limited to " +
                        std::to_string(kBruteForceSourceCap) + " source and " +
                        std::to_string(kBruteForceTargetCap) + " target vertices");
  }
  const LiteralRelations rel1(source);
  const LiteralRelations rel2(target);
  const std::size_t n1 = source.size();
  const std::size_t n2 = target.size();
  std::vector<std::size_t> image(n1, npos);
  std::vector<std::uint8_t> used(n2, 0);

  // Assign source vertices in preorder. Every pair is checked once both ends
  // are assigned; the infimum of a pair precedes both ends in preorder, so its
  // image is already known at that point.
  std::function<bool(std::size_t)> assign = [&](std::size_t u) {
    if (u == n1) return true;
    for (std::size_t x = 0; x < n2; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (std::size_t w = 0; w < u && ok; ++w) {
        if (rel1.is_ancestor(w, u) && !rel2.is_ancestor(image[w], x)) ok = false;
        if (rel1.is_ancestor(u, w) && !rel2.is_ancestor(x, image[w])) ok = false;
        if (ok && image[rel1.inf(w, u)] != rel2.inf(image[w], x)) ok = false;
      }
      if (!ok) continue;
      image[u] = x;
      used[x] = 1;
      if (assign(u + 1)) return true;
      used[x] = 0;
      image[u] = npos;
    }
    return false;
  };
  return assign(0);
}

}  // namespace weaktree
