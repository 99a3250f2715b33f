#include "weaktree/families.hpp"

#include "weaktree/embedding.hpp"
#include "weaktree/errors.hpp"

#include <optional>
#include <sstream>

namespace weaktree {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const ExtendedCount& max_leg(const TwoLeg& t) { return t.left; }
const ExtendedCount& min_leg(const TwoLeg& t) { return t.right; }

}  // namespace

TreeDescriptor TreeDescriptor::explicit_tree(RootedTree tree) {
  return TreeDescriptor(std::move(tree));
}

TreeDescriptor TreeDescriptor::chain(ExtendedCount length) {
  if (length < 1) throw InputError("chain length must be at least 1");
  return TreeDescriptor(Chain{std::move(length)});
}

TreeDescriptor TreeDescriptor::two_leg(ExtendedCount stem, ExtendedCount left,
                                       ExtendedCount right) {
  if (stem < 1 || left < 1 || right < 1) {
    throw InputError("two-leg stem and legs must each be at least 1");
  }
  if (left < right) std::swap(left, right);
  return TreeDescriptor(TwoLeg{std::move(stem), std::move(left), std::move(right)});
}

TreeDescriptor TreeDescriptor::parse(std::string_view text) {
  auto count_field = [&](std::size_t begin, std::size_t end) {
    try {
      return parse_count(text.substr(begin, end - begin));
    } catch (const ParseError& e) {
      throw ParseError("malformed descriptor count", begin + e.offset());
    }
  };
  if (text.starts_with("chain:")) {
    return chain(count_field(6, text.size()));
  }
  if (text.starts_with("twoleg:")) {
    const std::size_t a = 7;
    const std::size_t b = text.find(':', a);
    if (b == std::string_view::npos) throw ParseError("twoleg needs three fields", text.size());
    const std::size_t c = text.find(':', b + 1);
    if (c == std::string_view::npos) throw ParseError("twoleg needs three fields", text.size());
    return two_leg(count_field(a, b), count_field(b + 1, c), count_field(c + 1, text.size()));
  }
  if (text.starts_with("explicit:")) {
    try {
      return explicit_tree(parse_tree(text.substr(9)));
    } catch (const ParseError& e) {
      throw ParseError("malformed explicit tree", 9 + e.offset());
    }
  }
  throw ParseError("unknown descriptor kind (expected chain:, twoleg: or explicit:)", 0);
}

DescriptorKind TreeDescriptor::kind() const {
  return std::visit(Overloaded{[](const RootedTree&) { return DescriptorKind::Explicit; },
                               [](const Chain&) { return DescriptorKind::Chain; },
                               [](const TwoLeg&) { return DescriptorKind::TwoLeg; }},
                    value_);
}

std::string TreeDescriptor::to_string() const {
  return std::visit(
      Overloaded{[](const RootedTree& t) { return "explicit:" + t.code(); },
                 [](const Chain& c) { return "chain:" + c.length.str(); },
                 [](const TwoLeg& t) {
                   return "twoleg:" + t.stem.str() + ":" + t.left.str() + ":" + t.right.str();
                 }},
      value_);
}

ExtendedCount desc_size(const TreeDescriptor& d) {
  switch (d.kind()) {
    case DescriptorKind::Explicit: return d.tree().size();
    case DescriptorKind::Chain: return d.as_chain().length;
    case DescriptorKind::TwoLeg: {
      const auto& t = d.as_two_leg();
      return t.stem + t.left + t.right;
    }
  }
  return 0;
}

ExtendedCount desc_height(const TreeDescriptor& d) {
  switch (d.kind()) {
    case DescriptorKind::Explicit: return d.tree().height();
    case DescriptorKind::Chain: return d.as_chain().length;
    case DescriptorKind::TwoLeg: return d.as_two_leg().stem + max_leg(d.as_two_leg());
  }
  return 0;
}

ExtendedCount desc_leaf_count(const TreeDescriptor& d) {
  switch (d.kind()) {
    case DescriptorKind::Explicit: return d.tree().leaf_count();
    case DescriptorKind::Chain: return 1;
    case DescriptorKind::TwoLeg: return 2;
  }
  return 0;
}

RootedTree expand(const TreeDescriptor& d, std::size_t limit) {
  const ExtendedCount size = desc_size(d);
  if (size > limit) {
    throw CapacityError("descriptor " + d.to_string() + " has " + size.str() +
                        " vertices, above the expansion limit of " + std::to_string(limit));
  }
  switch (d.kind()) {
    case DescriptorKind::Explicit: return d.tree();
    case DescriptorKind::Chain: return RootedTree::chain(to_size(d.as_chain().length));
    case DescriptorKind::TwoLeg: {
      const auto& t = d.as_two_leg();
      const std::size_t stem = to_size(t.stem);
      std::vector<std::size_t> parents;
      parents.reserve(to_size(size));
      for (std::size_t i = 0; i < stem; ++i) parents.push_back(i == 0 ? RootedTree::npos : i - 1);
      for (const ExtendedCount* leg : {&t.left, &t.right}) {
        std::size_t above = stem - 1;
        for (std::size_t i = 0; i < to_size(*leg); ++i) {
          parents.push_back(above);
          above = parents.size() - 1;
        }
      }
      return RootedTree::from_parents(parents);
    }
  }
  throw InputError("unknown descriptor kind");
}

TreeDescriptor normalize(const TreeDescriptor& d) {
  if (d.kind() != DescriptorKind::Explicit) return d;
  const RootedTree& t = d.tree();
  if (t.leaf_count() == 1) return TreeDescriptor::chain(t.size());
  if (t.leaf_count() == 2) {
    std::size_t branch = 0;
    while (t.children(branch).size() == 1) branch = t.children(branch)[0];
    const auto legs = t.children(branch);
    return TreeDescriptor::two_leg(t.depth(branch) + 1, t.subtree_size(legs[0]),
                                   t.subtree_size(legs[1]));
  }
  return d;
}

bool family_embeds(const TreeDescriptor& source, const TreeDescriptor& target,
                   std::size_t limit) {
  const TreeDescriptor s = normalize(source);
  const TreeDescriptor t = normalize(target);
  const auto sk = s.kind();
  const auto tk = t.kind();

  if (tk == DescriptorKind::Explicit) {
    const RootedTree& host = t.tree();
    switch (sk) {
      case DescriptorKind::Explicit:
        if (s.tree().size() > limit || host.size() > limit) {
          throw CapacityError("explicit pair exceeds the expansion limit of " +
                              std::to_string(limit));
        }
        return inf_embeds(s.tree(), host);
      case DescriptorKind::Chain:
        // A chain's images are nested, so it fits iff some root path is long enough.
        return s.as_chain().length <= host.height();
      case DescriptorKind::TwoLeg:
        if (desc_size(s) > host.size()) return false;
        return inf_embeds(expand(s, host.size()), host);
    }
  }

  // The target is a chain or a two-leg tree: at most two leaves. Images of
  // distinct leaves are pairwise incomparable, so leaf count is monotone.
  if (sk == DescriptorKind::Explicit) return false;

  if (sk == DescriptorKind::Chain) {
    return s.as_chain().length <= desc_height(t);
  }
  if (tk == DescriptorKind::Chain) return false;

  // The branch vertex must land on the unique branch vertex of the target.
  const TwoLeg& a = s.as_two_leg();
  const TwoLeg& b = t.as_two_leg();
  return a.stem <= b.stem && min_leg(a) <= min_leg(b) && max_leg(a) <= max_leg(b);
}

std::string descriptor_to_dot(const TreeDescriptor& d, std::size_t dotted_threshold) {
  if (d.kind() == DescriptorKind::Explicit) return to_dot(d.tree());

  std::ostringstream os;
  std::size_t next_id = 0;
  os << "digraph tree {\n";
  os << "  node [shape=circle, style=filled, fillcolor=black, label=\"\", width=0.15];\n";
  os << "  edge [penwidth=2, arrowhead=none];\n";

  // Emits a path of `count` vertices below `above` and returns the last id.
  auto path = [&](std::optional<std::size_t> above, const ExtendedCount& count) {
    std::size_t first = next_id++;
    os << "  n" << first << ";\n";
    if (above) os << "  n" << *above << " -> n" << first << ";\n";
    if (count > dotted_threshold) {
      const std::size_t last = next_id++;
      os << "  n" << last << ";\n";
      os << "  n" << first << " -> n" << last << " [style=dotted, label=\"" << count.str()
         << "\"];\n";
      return last;
    }
    std::size_t prev = first;
    for (ExtendedCount i = 1; i < count; ++i) {
      const std::size_t id = next_id++;
      os << "  n" << id << ";\n";
      os << "  n" << prev << " -> n" << id << ";\n";
      prev = id;
    }
    return prev;
  };

  if (d.kind() == DescriptorKind::Chain) {
    path(std::nullopt, d.as_chain().length);
  } else {
    const TwoLeg& t = d.as_two_leg();
    const std::size_t branch = path(std::nullopt, t.stem);
    path(branch, t.left);
    path(branch, t.right);
  }
  os << "}\n";
  return os.str();
}

}  // namespace weaktree
