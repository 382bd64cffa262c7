#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsgp/semigroup.hpp"

namespace nsgp {

// Text literals shared by the CLI, the bindings and test fixtures:
//   semigroups  gen:3,19,20   gaps:1,2,4,7   (gaps: alone is N)
//   ideals      offset:3      igen:3,5

/// Strict comma-separated decimal list; empty text gives an empty list.
std::vector<Int> parse_int_list(std::string_view text);

NumericalSemigroup parse_semigroup_literal(std::string_view text);
SemigroupIdeal parse_ideal_literal(const NumericalSemigroup& s, std::string_view text);

/// gen:<minimal generators>
std::string format_semigroup(const NumericalSemigroup& s);
/// offset:<g> for principal ideals built from one generator, igen:<...> otherwise.
std::string format_ideal(const SemigroupIdeal& e);

}  // namespace nsgp
