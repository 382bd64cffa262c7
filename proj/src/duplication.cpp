#include "nsgp/duplication.hpp"

#include <algorithm>
#include <sstream>

#include "nsgp/literals.hpp"

namespace nsgp {

std::string_view to_string(EventualCase c) {
  switch (c) {
    case EventualCase::ad1_requires_N: return "ad1_requires_N";
    case EventualCase::ad2_monic: return "ad2_monic";
    case EventualCase::ad3_monic: return "ad3_monic";
    case EventualCase::ad3_nonmonic: return "ad3_nonmonic";
    case EventualCase::refuted_necessary: return "refuted_necessary";
    case EventualCase::necessary_only: return "necessary_only";
  }
  return "unknown";
}

AdmissionDecision admits_for_d(const NumericalSemigroup& s, const SemigroupIdeal& e,
                               const Pattern& p, Int d) {
  return admits_oracle(duplication(s, e, d), p);
}

DTable d_table(const NumericalSemigroup& s, const SemigroupIdeal& e, const Pattern& p,
               std::span<const Int> ds) {
  DTable table{s, e, p, {}};
  for (Int d : ds) table.rows.push_back({d, admits_for_d(s, e, p, d).admits});
  return table;
}

std::string format_dtable_text(const DTable& table) {
  std::size_t width = 1;
  for (const auto& row : table.rows) width = std::max(width, std::to_string(row.d).size());
  std::ostringstream out;
  out << "S = " << format_semigroup(table.s) << '\n'
      << "E = " << format_ideal(table.e) << '\n'
      << "p = " << format_pattern(table.p) << '\n'
      << std::string(width - 1, ' ') << "d | admits p\n"
      << std::string(width, '-') << "-+-----------\n";
  for (const auto& row : table.rows) {
    const auto d = std::to_string(row.d);
    out << std::string(width - d.size(), ' ') << d << " |";
    if (row.admits) out << " ✓";
    out << '\n';
  }
  return out.str();
}

std::string format_dtable_lines(const DTable& table) {
  std::ostringstream out;
  for (const auto& row : table.rows)
    out << "d=" << row.d << " admits=" << (row.admits ? "true" : "false") << '\n';
  return out.str();
}

Int eventual_threshold(const NumericalSemigroup& s, const SemigroupIdeal& e) {
  const Int cs = s.conductor(), ce = e.conductor(), me = e.min();
  return next_odd_member(s, std::max({2 * cs - 2 * me + 1, 2 * ce - 4 * me, 2 * ce - 2 * me}));
}

// ---------------------------------------------------------------------------
// Conditions

namespace {

void require_degree(const Pattern& p, int k) {
  const Degree ad = admissibility_degree(p);
  if (!(ad == k))
    throw Error(ErrorKind::WrongDegree, format_pattern(p) + " has admissibility degree " +
                                            to_string(ad) + ", expected " + std::to_string(k));
}

void require_monic(const Pattern& p) {
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, format_pattern(p) + " is not monic");
}

ConditionCheck failed(std::size_t index, std::string why) {
  return {false, index, std::move(why)};
}

std::string b_name(std::size_t i) { return "b" + std::to_string(i); }

}  // namespace

ConditionCheck ad2_coefficient_conditions(const SemigroupIdeal& e, const Pattern& p) {
  require_degree(p, 2);
  require_monic(p);
  const auto b = prefix_sums(p);
  const auto t = standard_decomposition(p).t;
  const auto ee = ideal_difference(e, e);
  const Int spread = e.conductor() - e.min();
  for (std::size_t i = 1; i <= t; ++i) {
    const Int bi = b[i - 1];
    if (bi % 2 != 0 && !ee.contains((bi - 1) / 2))
      return failed(i, b_name(i) + " = " + std::to_string(bi) + ": (b-1)/2 = " +
                           std::to_string((bi - 1) / 2) + " not in E-E");
    if (bi % 2 == 0 && bi / 2 < spread)
      return failed(i, b_name(i) + " = " + std::to_string(bi) + ": b/2 < c(E)-min(E) = " +
                           std::to_string(spread));
  }
  return {};
}

ImageCheck p_prime_image_check(const NumericalSemigroup& s, const SemigroupIdeal& e,
                               const Pattern& p) {
  require_monic(p);
  if (!admissibility_degree(p).at_least(3))
    throw Error(ErrorKind::WrongDegree,
                format_pattern(p) + " has admissibility degree below 3");
  const Pattern q = derive(p);
  const auto ee = ideal_difference(e, e);
  const Int bound = ee.conductor();
  if (q.is_zero()) return {};  // p'(S) = {0}

  // q is strongly admissible, so q(s) >= s1: only s1 < bound can escape E - E.
  const auto b = prefix_sums(q);
  const std::size_t n = q.length();
  std::vector<Int> members;
  for (Int x = 0; x < bound; ++x)
    if (s.contains(x)) members.push_back(x);
  std::vector<Int> tuple(n);
  ImageCheck out;
  // Lexicographically decreasing; acc is the contribution of the gaps so far.
  auto place = [&](auto& self, std::size_t i, Int acc) -> bool {
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      const Int x = *it;
      if (i > 0 && x > tuple[i - 1]) continue;
      const Int value = i == 0 ? 0 : acc + b[i - 1] * (tuple[i - 1] - x);
      if (value >= bound) break;
      tuple[i] = x;
      if (i + 1 == n) {
        const Int image = value + b[i] * x;
        if (!ee.contains(image)) {
          out = {false, tuple};
          return false;
        }
      } else if (!self(self, i + 1, value)) {
        return false;
      }
    }
    return true;
  };
  place(place, 0, 0);
  return out;
}

ConditionCheck necessary_conditions_ad2(const NumericalSemigroup& s,
                                        const SemigroupIdeal& e, const Pattern& p) {
  require_degree(p, 2);
  if (!(e.parent() == s)) throw Error(ErrorKind::IdealMismatch, "E is not an ideal of S");
  const auto b = prefix_sums(p);
  std::size_t r = 0, t = 0;
  for (std::size_t i = 1; i <= b.size(); ++i) {
    if (b[i - 1] != 1) continue;
    if (r == 0) r = i;
    t = i;
  }
  const auto ee = ideal_difference(e, e);
  const Int spread = e.conductor() - e.min();
  for (std::size_t i = 1; i <= t; ++i)
    if (!ee.contains(b[i - 1] / 2))
      return failed(i, "floor(" + b_name(i) + "/2) = " + std::to_string(b[i - 1] / 2) +
                           " not in E-E");
  for (std::size_t i = r; r > 0 && i <= t; ++i)
    if (b[i - 1] % 2 == 0 && b[i - 1] / 2 < spread)
      return failed(i, b_name(i) + " = " + std::to_string(b[i - 1]) +
                           ": b/2 < c(E)-min(E) = " + std::to_string(spread));
  return {};
}

// ---------------------------------------------------------------------------
// Eventual admission

namespace {

std::string tuple_text(const std::vector<Int>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ")";
}

EventualDecision verdict(std::optional<bool> v, EventualCase why, Int threshold,
                         std::optional<std::string> failing = std::nullopt) {
  return {v, why, std::move(failing), threshold};
}

void require_admissible(const Pattern& p) {
  if (!classify(p).admissible)
    throw Error(ErrorKind::NotAdmissible, format_pattern(p) + " is not admissible");
}

std::optional<EventualDecision> base_refutes(const NumericalSemigroup& s, const Pattern& p,
                                             Int threshold) {
  // (S ⋈^d E)/2 = S, so every d fails when S itself rejects p.
  const auto base = admits(s, p);
  if (base.admits) return std::nullopt;
  return verdict(false, EventualCase::refuted_necessary, threshold,
                 "S does not admit p: " + tuple_text(*base.counterexample));
}

}  // namespace

EventualDecision eventually_admits(const NumericalSemigroup& s, const SemigroupIdeal& e,
                                   const Pattern& p) {
  require_admissible(p);
  require_monic(p);
  if (!(e.parent() == s)) throw Error(ErrorKind::IdealMismatch, "E is not an ideal of S");
  const Int threshold = eventual_threshold(s, e);
  if (auto refuted = base_refutes(s, p, threshold)) return *refuted;

  const Degree ad = admissibility_degree(p);
  if (ad == 1) {
    // b1 = 1 must lie in the duplication, which is N only for S = E = N, d = 1.
    return verdict(false, EventualCase::ad1_requires_N, next_odd_member(s, std::max<Int>(threshold, 3)),
                   "b1 = 1 is not in the duplication for d >= 3");
  }
  if (ad == 2) {
    const auto cond = ad2_coefficient_conditions(e, p);
    if (!cond.holds) return verdict(false, EventualCase::ad2_monic, threshold, cond.description);
    const auto dec = standard_decomposition(p);
    std::vector<std::int64_t> lead{1};
    lead.insert(lead.end(), dec.tail.coefficients().begin(), dec.tail.coefficients().end());
    const Pattern rest(std::move(lead));
    const auto sub = eventually_admits(s, e, rest);
    if (sub.eventually_admits != true)
      return verdict(false, EventualCase::ad2_monic, threshold,
                     "x1+T_p = " + format_pattern(rest) + ": " +
                         sub.failing_condition.value_or(std::string(to_string(sub.reason))));
    return verdict(true, EventualCase::ad2_monic, std::max(threshold, *sub.threshold_d));
  }
  const auto image = p_prime_image_check(s, e, p);
  if (!image.holds)
    return verdict(false, EventualCase::ad3_monic, threshold,
                   "p'" + tuple_text(*image.witness) + " not in E-E");
  return verdict(true, EventualCase::ad3_monic, threshold);
}

EventualDecision nonmonic_eventual(const NumericalSemigroup& s, const SemigroupIdeal& e,
                                   const Pattern& p) {
  require_admissible(p);
  if (p.is_monic()) throw Error(ErrorKind::IsMonic, format_pattern(p) + " is monic");
  if (!(e.parent() == s)) throw Error(ErrorKind::IdealMismatch, "E is not an ideal of S");
  const Degree ad = admissibility_degree(p);
  const Int threshold = ad.at_least(3)
                            ? next_odd_member(s, 2 * e.conductor() - 4 * e.min())
                            : eventual_threshold(s, e);
  if (auto refuted = base_refutes(s, p, threshold)) return *refuted;
  if (ad.at_least(3)) return verdict(true, EventualCase::ad3_nonmonic, threshold);
  if (ad == 2) {
    const auto cond = necessary_conditions_ad2(s, e, p);
    if (!cond.holds)
      return verdict(false, EventualCase::refuted_necessary, threshold, cond.description);
  }
  return verdict(std::nullopt, EventualCase::necessary_only, threshold);
}

EventualDecision eventual(const NumericalSemigroup& s, const SemigroupIdeal& e,
                          const Pattern& p) {
  return p.is_monic() ? eventually_admits(s, e, p) : nonmonic_eventual(s, e, p);
}

}  // namespace nsgp
