#include "nsgp/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nsgp {

namespace {

std::size_t idx(Int x) { return static_cast<std::size_t>(x); }

std::string join(std::span<const Int> xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// CofiniteSet

CofiniteSet::CofiniteSet(Int lo, std::vector<bool> bits) {
  const Int hi = lo + static_cast<Int>(bits.size());
  Int first = lo;
  while (first < hi && !bits[idx(first - lo)]) ++first;
  Int cond = hi;
  while (cond > first && bits[idx(cond - 1 - lo)]) --cond;
  min_ = first;
  conductor_ = cond;
  bits_.assign(bits.begin() + (first - lo), bits.begin() + (cond - lo));
}

std::vector<Int> CofiniteSet::members_below_conductor() const {
  std::vector<Int> out;
  for (Int x = min_; x < conductor_; ++x)
    if (bits_[idx(x - min_)]) out.push_back(x);
  return out;
}

std::vector<Int> CofiniteSet::holes() const {
  std::vector<Int> out;
  for (Int x = min_; x < conductor_; ++x)
    if (!bits_[idx(x - min_)]) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// NumericalSemigroup

NumericalSemigroup::NumericalSemigroup()
    : NumericalSemigroup(CofiniteSet::tail_from(0)) {}

NumericalSemigroup::NumericalSemigroup(CofiniteSet elements)
    : elements_(std::move(elements)) {
  const Int c = conductor();
  gaps_ = elements_.holes();
  multiplicity_ = c == 0 ? 1 : c;
  for (Int x = 1; x < c; ++x) {
    if (contains(x)) {
      multiplicity_ = x;
      break;
    }
  }
  // Minimal generators lie below c + m (and 1 generates N).
  for (Int x = 1; x < std::max<Int>(c, 1) + multiplicity_; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (Int y = multiplicity_; 2 * y <= x && !decomposable; ++y)
      decomposable = contains(y) && contains(x - y);
    if (!decomposable) minimal_generators_.push_back(x);
  }
}

NumericalSemigroup NumericalSemigroup::from_set(CofiniteSet elements) {
  if (elements.min() != 0)
    throw Error(ErrorKind::NotASemigroup, "0 is not a member");
  const auto members = elements.members_below_conductor();
  for (std::size_t i = 1; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size(); ++j) {
      const Int sum = members[i] + members[j];
      if (sum >= elements.conductor()) break;
      if (!elements.contains(sum)) {
        std::ostringstream msg;
        msg << members[i] << " + " << members[j] << " = " << sum
            << " is not a member";
        throw Error(ErrorKind::NotASemigroup, msg.str());
      }
    }
  }
  return NumericalSemigroup(std::move(elements));
}

NumericalSemigroup semigroup_from_generators(std::span<const Int> gens) {
  if (gens.empty())
    throw Error(ErrorKind::InvalidArgument, "generator list is empty");
  Int g = 0;
  for (Int x : gens) {
    if (x < 1)
      throw Error(ErrorKind::InvalidArgument, "generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1)
    throw Error(ErrorKind::GcdNotOne,
                "gcd(" + join(gens) + ") = " + std::to_string(g));

  const Int m = *std::min_element(gens.begin(), gens.end());
  // Grow the table until m consecutive members appear; everything after is
  // then reachable by adding m.
  std::vector<bool> member{true};
  Int run = 1;
  Int x = 0;
  while (run < m) {
    ++x;
    bool in = false;
    for (Int gen : gens)
      if (gen <= x && member[idx(x - gen)]) {
        in = true;
        break;
      }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  const Int hi = static_cast<Int>(member.size());
  return NumericalSemigroup::from_set(CofiniteSet::from_predicate(
      0, hi, [&](Int y) { return static_cast<bool>(member[idx(y)]); }));
}

NumericalSemigroup semigroup_from_gap_set(std::span<const Int> gaps) {
  Int hi = 0;
  for (Int g : gaps) {
    if (g < 0) throw Error(ErrorKind::InvalidArgument, "gaps must be >= 0");
    hi = std::max(hi, g + 1);
  }
  std::vector<bool> gap(idx(hi));
  for (Int g : gaps) gap[idx(g)] = true;
  return NumericalSemigroup::from_set(CofiniteSet::from_predicate(
      0, hi, [&](Int y) { return !gap[idx(y)]; }));
}

SemigroupInvariants basic_invariants(const NumericalSemigroup& s) {
  return {s.multiplicity(), s.conductor(), s.frobenius(), s.genus(),
          s.gaps(),         s.minimal_generators()};
}

NumericalSemigroup quotient(const NumericalSemigroup& s, Int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "quotient needs k >= 1");
  const Int hi = (s.conductor() + k - 1) / k;
  return NumericalSemigroup::from_set(CofiniteSet::from_predicate(
      0, hi, [&](Int x) { return s.contains(k * x); }));
}

// ---------------------------------------------------------------------------
// Ideals

SemigroupIdeal::SemigroupIdeal(NumericalSemigroup parent, CofiniteSet elements,
                               std::vector<Int> generators)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {}

SemigroupIdeal ideal_from_generators(const NumericalSemigroup& s,
                                     std::span<const Int> gens) {
  if (gens.empty())
    throw Error(ErrorKind::InvalidArgument, "ideal generator list is empty");
  for (Int g : gens)
    if (!s.contains(g))
      throw Error(ErrorKind::NotInSemigroup,
                  "ideal generator " + std::to_string(g) + " is not in S");
  const Int lo = *std::min_element(gens.begin(), gens.end());
  // min(gens) + S already covers [lo + c(S), infinity).
  const Int hi = lo + s.conductor();
  auto elements = CofiniteSet::from_predicate(lo, hi, [&](Int x) {
    return std::any_of(gens.begin(), gens.end(),
                       [&](Int g) { return s.contains(x - g); });
  });
  std::vector<Int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return SemigroupIdeal(s, std::move(elements), std::move(sorted));
}

SemigroupIdeal principal_ideal(const NumericalSemigroup& s, Int offset) {
  const Int g[] = {offset};
  return ideal_from_generators(s, g);
}

CofiniteSet ideal_difference(const SemigroupIdeal& e, const SemigroupIdeal& f) {
  if (!(e.parent() == f.parent()))
    throw Error(ErrorKind::IdealMismatch, "ideals of different semigroups");
  // z + min(F) in E forces z >= min(E) - min(F); z >= c(E) - min(F) puts all
  // of z + F above c(E).
  const Int lo = e.min() - f.min();
  const Int hi = std::max(lo, e.conductor() - f.min());
  return CofiniteSet::from_predicate(lo, hi, [&](Int z) {
    for (Int y = f.min(); z + y < e.conductor(); ++y)
      if (f.contains(y) && !e.contains(z + y)) return false;
    return true;
  });
}

NumericalSemigroup duplication(const NumericalSemigroup& s,
                               const SemigroupIdeal& e, Int d) {
  if (!(e.parent() == s))
    throw Error(ErrorKind::IdealMismatch, "E is not an ideal of S");
  if (d < 0 || d % 2 == 0)
    throw Error(ErrorKind::DNotOdd, "d = " + std::to_string(d) + " is not odd");
  if (!s.contains(d))
    throw Error(ErrorKind::DNotInS, "d = " + std::to_string(d) + " is not in S");
  // Both halves are full from 2 c(E) + d on, since c(E) >= c(S).
  const Int hi = 2 * e.conductor() + d;
  return NumericalSemigroup::from_set(CofiniteSet::from_predicate(0, hi, [&](Int x) {
    if (x % 2 == 0) return s.contains(x / 2);
    return x >= d && e.contains((x - d) / 2);
  }));
}

bool is_arf(const NumericalSemigroup& s) {
  // x >= c(S) gives x + y - z >= x in S, so only x below the conductor matter.
  const auto members = s.members_below_conductor();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (std::size_t k = 0; k <= j; ++k)
        if (!s.contains(members[i] + members[j] - members[k])) return false;
  return true;
}

Int next_odd_member(const NumericalSemigroup& s, Int lower) {
  Int x = std::max<Int>(lower, 1);
  if (x % 2 == 0) ++x;
  while (!s.contains(x)) x += 2;
  return x;
}

}  // namespace nsgp
