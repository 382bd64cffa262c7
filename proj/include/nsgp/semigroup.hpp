#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nsgp/error.hpp"

namespace nsgp {

using Int = std::int64_t;

/// A subset of the integers that is bounded below and contains every integer
/// from its conductor on. Membership is stored as a bit table over
/// [min, conductor).
class CofiniteSet {
 public:
  /// {x in [lo, hi) : in(x)} together with every x >= hi. Requires lo <= hi.
  template <class Pred>
  static CofiniteSet from_predicate(Int lo, Int hi, Pred&& in) {
    if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty scan window");
    std::vector<bool> bits(static_cast<std::size_t>(hi - lo));
    for (Int x = lo; x < hi; ++x) bits[static_cast<std::size_t>(x - lo)] = in(x);
    return CofiniteSet(lo, std::move(bits));
  }

  /// The half-line [from, infinity).
  static CofiniteSet tail_from(Int from) { return CofiniteSet(from, {}); }

  bool contains(Int x) const {
    if (x >= conductor_) return true;
    if (x < min_) return false;
    return bits_[static_cast<std::size_t>(x - min_)];
  }

  Int min() const { return min_; }
  Int conductor() const { return conductor_; }

  /// Members in [min, conductor), ascending.
  std::vector<Int> members_below_conductor() const;
  /// Non-members in [min, conductor), ascending.
  std::vector<Int> holes() const;

  bool operator==(const CofiniteSet&) const = default;

 private:
  CofiniteSet(Int lo, std::vector<bool> bits);

  Int min_ = 0;
  Int conductor_ = 0;
  std::vector<bool> bits_;
};

/// A numerical semigroup: a submonoid of the naturals with finite complement.
/// Immutable; equality is equality of the membership table and conductor.
class NumericalSemigroup {
 public:
  /// The naturals.
  NumericalSemigroup();

  /// Validates additive closure. Throws NotASemigroup with a witness pair.
  static NumericalSemigroup from_set(CofiniteSet elements);

  bool contains(Int x) const { return elements_.contains(x); }

  Int conductor() const { return elements_.conductor(); }
  /// c(S) - 1, or -1 for the naturals.
  Int frobenius() const { return conductor() - 1; }
  Int multiplicity() const { return multiplicity_; }
  Int genus() const { return static_cast<Int>(gaps_.size()); }
  bool is_naturals() const { return conductor() == 0; }

  const std::vector<Int>& gaps() const { return gaps_; }
  const std::vector<Int>& minimal_generators() const { return minimal_generators_; }
  std::vector<Int> members_below_conductor() const {
    return elements_.members_below_conductor();
  }
  const CofiniteSet& elements() const { return elements_; }

  bool operator==(const NumericalSemigroup& other) const {
    return elements_ == other.elements_;
  }

 private:
  explicit NumericalSemigroup(CofiniteSet elements);

  CofiniteSet elements_;
  Int multiplicity_ = 1;
  std::vector<Int> gaps_;
  std::vector<Int> minimal_generators_;
};

struct SemigroupInvariants {
  Int multiplicity;
  Int conductor;
  Int frobenius;
  Int genus;
  std::vector<Int> gaps;
  std::vector<Int> minimal_generators;
};

/// An ideal E of a numerical semigroup S, that is E + S is contained in E.
class SemigroupIdeal {
 public:
  const NumericalSemigroup& parent() const { return parent_; }
  bool contains(Int x) const { return elements_.contains(x); }
  Int min() const { return elements_.min(); }
  Int conductor() const { return elements_.conductor(); }
  const CofiniteSet& elements() const { return elements_; }
  /// Generators of E as an ideal, in case it was built from them.
  const std::vector<Int>& generators() const { return generators_; }

  bool operator==(const SemigroupIdeal& other) const {
    return parent_ == other.parent_ && elements_ == other.elements_;
  }

 private:
  friend SemigroupIdeal ideal_from_generators(const NumericalSemigroup&,
                                              std::span<const Int>);
  SemigroupIdeal(NumericalSemigroup parent, CofiniteSet elements,
                 std::vector<Int> generators);

  NumericalSemigroup parent_;
  CofiniteSet elements_;
  std::vector<Int> generators_;
};

/// Smallest numerical semigroup containing `gens`. Throws GcdNotOne.
NumericalSemigroup semigroup_from_generators(std::span<const Int> gens);

/// N minus `gaps`, if that set is additively closed.
NumericalSemigroup semigroup_from_gap_set(std::span<const Int> gaps);

SemigroupInvariants basic_invariants(const NumericalSemigroup& s);

/// {x : k x in S}.
NumericalSemigroup quotient(const NumericalSemigroup& s, Int k);

/// Union of the translates g + S. Every generator must lie in S.
SemigroupIdeal ideal_from_generators(const NumericalSemigroup& s,
                                     std::span<const Int> gens);

/// The principal ideal offset + S.
SemigroupIdeal principal_ideal(const NumericalSemigroup& s, Int offset);

/// {z in Z : z + F is contained in E}. Both ideals must share a parent.
CofiniteSet ideal_difference(const SemigroupIdeal& e, const SemigroupIdeal& f);

/// 2.S united with 2.E + d, for odd d in S.
NumericalSemigroup duplication(const NumericalSemigroup& s,
                               const SemigroupIdeal& e, Int d);

/// x + y - z in S for all x >= y >= z in S.
bool is_arf(const NumericalSemigroup& s);

/// Smallest odd element of S that is >= lower.
Int next_odd_member(const NumericalSemigroup& s, Int lower);

}  // namespace nsgp
