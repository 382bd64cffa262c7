#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsgp/admission.hpp"
#include "nsgp/pattern.hpp"
#include "nsgp/semigroup.hpp"

namespace nsgp {

// Eventual admission of S ⋈^d E: S ⋈^d E admits p for every odd d in S beyond
// some threshold.

enum class EventualCase {
  ad1_requires_N,
  ad2_monic,
  ad3_monic,
  ad3_nonmonic,
  refuted_necessary,
  necessary_only,
};

std::string_view to_string(EventualCase c);

struct EventualDecision {
  /// Empty when only necessary conditions could be checked and they passed.
  std::optional<bool> eventually_admits;
  EventualCase reason = EventualCase::refuted_necessary;
  std::optional<std::string> failing_condition;
  /// Every odd d in S at or above this value behaves like the verdict.
  std::optional<Int> threshold_d;
};

struct DTableRow {
  Int d;
  bool admits;
};

struct DTable {
  NumericalSemigroup s;
  SemigroupIdeal e;
  Pattern p;
  std::vector<DTableRow> rows;
};

struct ConditionCheck {
  bool holds = true;
  /// 1-based index of the first prefix sum that failed.
  std::optional<std::size_t> failing_index;
  std::optional<std::string> description;
};

struct ImageCheck {
  bool holds = true;
  std::optional<std::vector<Int>> witness;
};

/// admits_oracle(duplication(S, E, d), p).
AdmissionDecision admits_for_d(const NumericalSemigroup& s, const SemigroupIdeal& e,
                               const Pattern& p, Int d);

/// One admits_for_d row per entry of `ds`, in input order.
DTable d_table(const NumericalSemigroup& s, const SemigroupIdeal& e, const Pattern& p,
               std::span<const Int> ds);

/// Aligned text with a check mark for each admitting d.
std::string format_dtable_text(const DTable& table);
/// One `d=<n> admits=<true|false>` line per row.
std::string format_dtable_lines(const DTable& table);

/// Largest of the explicit lower bounds on d, rounded up to an odd member of S:
/// 2c(S) - 2min(E) + 1, 2c(E) - 4min(E) and 2c(E) - 2min(E).
Int eventual_threshold(const NumericalSemigroup& s, const SemigroupIdeal& e);

/// For monic p of degree 2 and every i <= t: odd b_i needs (b_i - 1)/2 in E - E,
/// even b_i needs b_i/2 >= c(E) - min(E). Throws WrongDegree or NotMonic.
ConditionCheck ad2_coefficient_conditions(const SemigroupIdeal& e, const Pattern& p);

/// Decides p'(S) ⊆ E - E for monic p of degree >= 3. Since p' is strongly
/// admissible, p'(s) >= s1 and only tuples with s1 below the conductor of
/// E - E need checking. Throws WrongDegree or NotMonic.
ImageCheck p_prime_image_check(const NumericalSemigroup& s, const SemigroupIdeal& e,
                               const Pattern& p);

/// Necessary conditions for eventual admission of a degree-2 pattern, with
/// B = {i : b_i = 1}, r = min B, t = max B:
///   floor(b_i / 2) in E - E for 1 <= i <= t;
///   b_i even implies b_i/2 >= c(E) - min(E) for r <= i <= t.
/// Throws WrongDegree.
ConditionCheck necessary_conditions_ad2(const NumericalSemigroup& s,
                                        const SemigroupIdeal& e, const Pattern& p);

/// Complete characterization for monic admissible p. Throws NotMonic or
/// NotAdmissible.
EventualDecision eventually_admits(const NumericalSemigroup& s, const SemigroupIdeal& e,
                                   const Pattern& p);

/// Non-monic p: degree >= 3 is always eventually admitted (given S admits p);
/// degree <= 2 only gets the necessary conditions. Throws IsMonic or
/// NotAdmissible.
EventualDecision nonmonic_eventual(const NumericalSemigroup& s, const SemigroupIdeal& e,
                                   const Pattern& p);

/// Dispatches on a1.
EventualDecision eventual(const NumericalSemigroup& s, const SemigroupIdeal& e,
                          const Pattern& p);

}  // namespace nsgp
