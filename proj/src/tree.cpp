#include "weaktree/tree.hpp"

#include "weaktree/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace weaktree {

namespace {

// Sorts child codes in descending order and wraps them in one vertex.
std::string assemble(std::vector<std::string>& child_codes) {
  std::sort(child_codes.begin(), child_codes.end(), std::greater<>());
  std::size_t total = 2;
  for (const auto& c : child_codes) total += c.size();
  std::string out;
  out.reserve(total);
  out.push_back('(');
  for (auto& c : child_codes) {
    out += c;
    std::string().swap(c);
  }
  out.push_back(')');
  return out;
}

// Canonical code of an arbitrary tree given as child lists rooted at `root`.
std::string canonical_code(const std::vector<std::vector<std::size_t>>& kids, std::size_t root) {
  std::vector<std::string> code(kids.size());
  // Iterative postorder: a vertex is finalized after all of its children.
  std::vector<std::pair<std::size_t, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (!expanded) {
      stack.emplace_back(v, true);
      for (std::size_t c : kids[v]) stack.emplace_back(c, false);
      continue;
    }
    std::vector<std::string> child_codes;
    child_codes.reserve(kids[v].size());
    for (std::size_t c : kids[v]) child_codes.push_back(std::move(code[c]));
    code[v] = assemble(child_codes);
  }
  return std::move(code[root]);
}

}  // namespace

RootedTree::RootedTree() : RootedTree(FromCanonical{}, "()") {}

RootedTree::RootedTree(FromCanonical, std::string canonical)
    : code_(std::move(canonical)) {
  const std::size_t n = code_.size() / 2;
  parent_.reserve(n);
  depth_.reserve(n);
  subtree_size_.assign(n, 1);
  std::vector<std::vector<std::size_t>> kids;
  kids.reserve(n);

  std::vector<std::size_t> open;
  for (char ch : code_) {
    if (ch == '(') {
      const std::size_t id = parent_.size();
      parent_.push_back(open.empty() ? npos : open.back());
      depth_.push_back(open.size());
      kids.emplace_back();
      if (!open.empty()) kids[open.back()].push_back(id);
      open.push_back(id);
    } else {
      const std::size_t id = open.back();
      open.pop_back();
      subtree_size_[id] = parent_.size() - id;
    }
  }

  child_begin_.reserve(n + 1);
  child_list_.reserve(n == 0 ? 0 : n - 1);
  for (const auto& k : kids) {
    child_begin_.push_back(child_list_.size());
    child_list_.insert(child_list_.end(), k.begin(), k.end());
  }
  child_begin_.push_back(child_list_.size());

  height_.assign(n, 1);
  leaves_.assign(n, 0);
  for (std::size_t v = n; v-- > 0;) {
    if (kids[v].empty()) leaves_[v] = 1;
    for (std::size_t c : kids[v]) {
      height_[v] = std::max(height_[v], height_[c] + 1);
      leaves_[v] += leaves_[c];
    }
  }
}

RootedTree RootedTree::chain(std::size_t vertices) {
  if (vertices == 0) throw InputError("empty tree not permitted");
  std::string code(vertices, '(');
  code.append(vertices, ')');
  return RootedTree(FromCanonical{}, std::move(code));
}

RootedTree RootedTree::from_children(std::vector<RootedTree> children) {
  std::vector<std::string> codes;
  codes.reserve(children.size());
  for (auto& c : children) codes.push_back(std::move(c.code_));
  return RootedTree(FromCanonical{}, assemble(codes));
}

RootedTree RootedTree::from_parents(std::span<const std::size_t> parents) {
  if (parents.empty()) throw InputError("empty tree not permitted");
  std::vector<std::vector<std::size_t>> kids(parents.size());
  std::size_t root = npos;
  for (std::size_t v = 0; v < parents.size(); ++v) {
    if (parents[v] == npos) {
      if (root != npos) throw InputError("parent array has more than one root");
      root = v;
    } else {
      if (parents[v] >= parents.size()) throw InputError("parent index out of range");
      kids[parents[v]].push_back(v);
    }
  }
  if (root == npos) throw InputError("parent array has no root");

  // Reachability from the root rules out cycles.
  std::size_t reached = 0;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t c : kids[v]) stack.push_back(c);
    if (reached > parents.size()) break;
  }
  if (reached != parents.size()) throw InputError("parent array is not a tree");

  return RootedTree(FromCanonical{}, canonical_code(kids, root));
}

std::vector<RootedTree> RootedTree::root_children() const {
  std::vector<RootedTree> out;
  // Each child subtree occupies a contiguous span of the code; locate it by
  // counting opening parentheses up to the child's preorder index.
  std::size_t opened = 0;
  std::size_t pos = 0;
  for (std::size_t c : children(0)) {
    while (opened <= c) {
      if (code_[pos] == '(') ++opened;
      ++pos;
    }
    const std::size_t begin = pos - 1;
    out.push_back(RootedTree(FromCanonical{}, code_.substr(begin, 2 * subtree_size_[c])));
  }
  return out;
}

RootedTree parse_tree(std::string_view text) {
  if (text.empty()) throw ParseError("empty tree not permitted", 0);
  std::vector<std::size_t> parents;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(') {
      if (open.empty() && !parents.empty()) throw ParseError("more than one root", i);
      parents.push_back(open.empty() ? RootedTree::npos : open.back());
      open.push_back(parents.size() - 1);
    } else if (ch == ')') {
      if (open.empty()) throw ParseError("unmatched ')'", i);
      open.pop_back();
    } else {
      throw ParseError(std::string("unexpected character '") + ch + "'", i);
    }
  }
  if (!open.empty()) throw ParseError("unbalanced input, missing ')'", text.size());
  return RootedTree::from_parents(parents);
}

VertexId lca(const RootedTree& t, VertexId u, VertexId v) {
  if (u.index >= t.size() || v.index >= t.size()) {
    throw InputError("vertex id out of range for a tree of size " + std::to_string(t.size()));
  }
  std::size_t w = u.index;
  while (!t.is_ancestor(w, v.index)) w = t.parent(w);
  return VertexId{w};
}

std::vector<std::string> enumerate_rooted_trees(std::size_t vertices, std::size_t cap) {
  if (vertices == 0) throw InputError("enumeration requires at least one vertex");
  if (vertices > cap) {
    throw CapacityError("enumeration of " + std::to_string(vertices) +
                        "-vertex trees exceeds the cap of " + std::to_string(cap));
  }

  // by_size[s] holds the codes of all trees with s vertices. A tree of size s
  // is a root plus a multiset of smaller trees; multisets are generated as
  // non-increasing sequences over a global item order to avoid duplicates.
  std::vector<std::vector<std::string>> by_size(vertices + 1);
  by_size[1] = {"()"};
  for (std::size_t s = 2; s <= vertices; ++s) {
    std::vector<const std::string*> items;
    std::vector<std::size_t> item_size;
    for (std::size_t k = 1; k < s; ++k) {
      for (const auto& c : by_size[k]) {
        items.push_back(&c);
        item_size.push_back(k);
      }
    }
    std::vector<std::size_t> picked;
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t remaining,
                                                             std::size_t max_item) {
      if (remaining == 0) {
        std::vector<std::string> codes;
        codes.reserve(picked.size());
        for (std::size_t i : picked) codes.push_back(*items[i]);
        by_size[s].push_back(assemble(codes));
        return;
      }
      for (std::size_t i = 0; i < max_item; ++i) {
        if (item_size[i] > remaining) break;
        picked.push_back(i);
        pick(remaining - item_size[i], i + 1);
        picked.pop_back();
      }
    };
    pick(s - 1, items.size());
  }
  auto out = std::move(by_size[vertices]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const RootedTree& t) {
  std::ostringstream os;
  os << "digraph tree {\n";
  os << "  node [shape=circle, style=filled, fillcolor=black, label=\"\", width=0.15];\n";
  os << "  edge [penwidth=2, arrowhead=none];\n";
  for (std::size_t v = 0; v < t.size(); ++v) os << "  n" << v << ";\n";
  for (std::size_t v = 0; v < t.size(); ++v) {
    for (std::size_t c : t.children(v)) os << "  n" << v << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace weaktree
