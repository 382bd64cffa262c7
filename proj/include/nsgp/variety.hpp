#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nsgp/pattern.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

inline constexpr Int kDefaultGenusCap = 25;

struct VarietyNode {
  NumericalSemigroup semigroup;
  Int genus = 0;
  /// Frobenius number of the parent; empty for the root N.
  std::optional<Int> parent_frobenius;
};

struct GenusCounts {
  /// counts[g] = number of semigroups of genus g in the variety.
  std::vector<std::uint64_t> counts;
  /// Filled only when requested; sorted by (genus, gap set).
  std::vector<VarietyNode> nodes;
};

/// Smallest semigroup containing S that admits p. Throws NotStronglyAdmissible.
NumericalSemigroup p_closure(const NumericalSemigroup& s, const Pattern& p);

/// Semigroups T admitting p with T united with {F(T)} equal to S, i.e. S minus
/// one of its minimal generators above F(S). Throws NotStronglyAdmissible or
/// NotInVariety.
std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s,
                                              const Pattern& p);

/// Breadth-first walk of the tree of the variety S(p) from N down to
/// genus_max. `visit`, if given, receives every node in canonical order. Throws
/// NotStronglyAdmissible or GenusCapExceeded when genus_max > genus_cap.
GenusCounts enumerate_by_genus(const Pattern& p, Int genus_max, bool keep_nodes = false,
                               Int genus_cap = kDefaultGenusCap,
                               const std::function<void(const VarietyNode&)>& visit = {});

/// Every numerical semigroup of genus <= genus_max, sorted by (genus, gap set).
std::vector<NumericalSemigroup> semigroups_up_to_genus(Int genus_max,
                                                       Int genus_cap = kDefaultGenusCap);

}  // namespace nsgp
