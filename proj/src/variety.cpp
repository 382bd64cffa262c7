#include "nsgp/variety.hpp"

#include <algorithm>

#include "nsgp/admission.hpp"

namespace nsgp {

namespace {

void require_strongly_admissible(const Pattern& p) {
  if (!classify(p).strongly_admissible)
    throw Error(ErrorKind::NotStronglyAdmissible,
                format_pattern(p) + " is not strongly admissible");
}

// Smallest submonoid of N containing `seed` (which must contain 0 and be
// cofinite).
NumericalSemigroup additive_closure(const CofiniteSet& seed) {
  const Int hi = seed.conductor();
  std::vector<bool> in(static_cast<std::size_t>(hi));
  for (Int x = 0; x < hi; ++x) {
    bool member = x == 0 || seed.contains(x);
    for (Int y = 1; !member && 2 * y <= x; ++y)
      member = in[static_cast<std::size_t>(y)] && in[static_cast<std::size_t>(x - y)];
    in[static_cast<std::size_t>(x)] = member;
  }
  return NumericalSemigroup::from_set(CofiniteSet::from_predicate(
      0, hi, [&](Int x) { return static_cast<bool>(in[static_cast<std::size_t>(x)]); }));
}

bool by_gaps(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  return a.gaps() < b.gaps();
}

std::vector<NumericalSemigroup> children_where(
    const NumericalSemigroup& s,
    const std::function<bool(const NumericalSemigroup&)>& accept) {
  std::vector<NumericalSemigroup> out;
  for (Int x : s.minimal_generators()) {
    if (x <= s.frobenius()) continue;
    auto child = NumericalSemigroup::from_set(CofiniteSet::from_predicate(
        0, x + 1, [&](Int y) { return y != x && s.contains(y); }));
    if (accept(child)) out.push_back(std::move(child));
  }
  std::sort(out.begin(), out.end(), by_gaps);
  return out;
}

template <class OnLevel>
void walk_tree(Int genus_max, Int genus_cap,
               const std::function<bool(const NumericalSemigroup&)>& accept,
               OnLevel&& on_level) {
  if (genus_max < 0) throw Error(ErrorKind::InvalidArgument, "genus_max must be >= 0");
  if (genus_max > genus_cap)
    throw Error(ErrorKind::GenusCapExceeded,
                "genus " + std::to_string(genus_max) + " exceeds cap " +
                    std::to_string(genus_cap));
  std::vector<VarietyNode> level{{NumericalSemigroup(), 0, std::nullopt}};
  for (Int g = 0; g <= genus_max; ++g) {
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) {
      return by_gaps(a.semigroup, b.semigroup);
    });
    on_level(level);
    if (g == genus_max) break;
    std::vector<VarietyNode> next;
    for (const auto& node : level)
      for (auto& child : children_where(node.semigroup, accept))
        next.push_back({std::move(child), g + 1, node.semigroup.frobenius()});
    level = std::move(next);
  }
}

}  // namespace

NumericalSemigroup p_closure(const NumericalSemigroup& s, const Pattern& p) {
  require_strongly_admissible(p);
  NumericalSemigroup current = s;
  while (true) {
    // Every image of members of the closure is itself in the closure, so the
    // low images of `current` can be added safely; none missing means p is
    // admitted.
    std::vector<Int> missing;
    for_each_low_image(current, p, [&](std::span<const Int>, Int image) {
      if (!current.contains(image)) missing.push_back(image);
      return true;
    });
    if (missing.empty()) return current;
    std::sort(missing.begin(), missing.end());
    current = additive_closure(CofiniteSet::from_predicate(
        0, current.conductor(), [&](Int x) {
          return current.contains(x) ||
                 std::binary_search(missing.begin(), missing.end(), x);
        }));
  }
}

std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s,
                                              const Pattern& p) {
  require_strongly_admissible(p);
  if (!admits(s, p).admits)
    throw Error(ErrorKind::NotInVariety, "S does not admit " + format_pattern(p));
  return children_where(s, [&](const NumericalSemigroup& t) { return admits(t, p).admits; });
}

GenusCounts enumerate_by_genus(const Pattern& p, Int genus_max, bool keep_nodes,
                               Int genus_cap,
                               const std::function<void(const VarietyNode&)>& visit) {
  require_strongly_admissible(p);
  GenusCounts out;
  walk_tree(
      genus_max, genus_cap,
      [&](const NumericalSemigroup& t) { return admits(t, p).admits; },
      [&](const std::vector<VarietyNode>& level) {
        out.counts.push_back(level.size());
        for (const auto& node : level) {
          if (visit) visit(node);
          if (keep_nodes) out.nodes.push_back(node);
        }
      });
  return out;
}

std::vector<NumericalSemigroup> semigroups_up_to_genus(Int genus_max, Int genus_cap) {
  std::vector<NumericalSemigroup> out;
  walk_tree(
      genus_max, genus_cap, [](const NumericalSemigroup&) { return true; },
      [&](const std::vector<VarietyNode>& level) {
        for (const auto& node : level) out.push_back(node.semigroup);
      });
  return out;
}

}  // namespace nsgp
