#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nsgp/pattern.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

enum class AdmissionMethod {
  oracle,
  inadmissible_pattern,
  conductor_bound,
  ad1_structure,
  ad2_monic_structure,
};

std::string_view to_string(AdmissionMethod m);

struct AdmissionDecision {
  bool admits = true;
  /// Set iff !admits: a non-increasing tuple of members whose image is not in S.
  std::optional<std::vector<Int>> counterexample;
  AdmissionMethod method = AdmissionMethod::oracle;
};

/// a1 s1 + ... + an sn. Throws LengthMismatch or NotSorted.
Int eval_pattern(const Pattern& p, std::span<const Int> tuple);

/// Visits, in lexicographically decreasing order, every non-increasing tuple of
/// members of S with consecutive differences and last entry at most c(S)
/// whose image lies below c(S). Stops when `visit` returns false.
///
/// For an admissible pattern these are the only tuples that can witness a
/// failure of admission: a coordinate gap with b_i >= 1 that exceeds c(S)
/// already pushes p(s) past the conductor, and one with b_i = 0 (or an oversized
/// s_n with b_n = 0) can be shrunk by translating the entries above it, all of
/// which stay above the conductor. Throws NotAdmissible.
void for_each_low_image(const NumericalSemigroup& s, const Pattern& p,
                        const std::function<bool(std::span<const Int>, Int)>& visit);

/// Exhaustive decision over the bounded tuple box.
AdmissionDecision admits_oracle(const NumericalSemigroup& s, const Pattern& p);

/// Same verdict as admits_oracle, using the structural shortcuts where they
/// apply: conductor/multiplicity bound, admissibility-degree-1 structure and
/// monic admissibility-degree-2 structure.
AdmissionDecision admits(const NumericalSemigroup& s, const Pattern& p);

/// True iff ad(p) = 2 and b_i = 2 for some i <= t, t the end of the center.
bool is_arf_equivalent(const Pattern& p);

/// <q, q+1> united with kq + N, where q = c_r + k. It has conductor k m(S), so it
/// admits every pattern of degree >= k + 1 and rejects any degree-k pattern
/// whose center carries c_r.
NumericalSemigroup separating_semigroup(Int k, Int c_r);

/// {0, q, q+1, q+3, ->}. Not Arf. Requires q > 1; q = 2 is not closed under
/// addition and raises NotASemigroup.
NumericalSemigroup arf_witness_semigroup(Int q);

}  // namespace nsgp
