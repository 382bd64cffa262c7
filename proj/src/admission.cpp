#include "nsgp/admission.hpp"

#include <algorithm>

namespace nsgp {

std::string_view to_string(AdmissionMethod m) {
  switch (m) {
    case AdmissionMethod::oracle: return "oracle";
    case AdmissionMethod::inadmissible_pattern: return "inadmissible_pattern";
    case AdmissionMethod::conductor_bound: return "conductor_bound";
    case AdmissionMethod::ad1_structure: return "ad1_structure";
    case AdmissionMethod::ad2_monic_structure: return "ad2_monic_structure";
  }
  return "unknown";
}

Int eval_pattern(const Pattern& p, std::span<const Int> tuple) {
  if (tuple.size() != p.length())
    throw Error(ErrorKind::LengthMismatch,
                "pattern has " + std::to_string(p.length()) + " variables, tuple has " +
                    std::to_string(tuple.size()));
  Int value = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0 && tuple[i] > tuple[i - 1])
      throw Error(ErrorKind::NotSorted, "tuple is not non-increasing");
    value += p[i] * tuple[i];
  }
  return value;
}

// ---------------------------------------------------------------------------
// Bounded tuple search

namespace {

class LowImageSearch {
 public:
  using Visitor = std::function<bool(std::span<const Int>, Int)>;

  LowImageSearch(const NumericalSemigroup& s, const Pattern& p, const Visitor& visit)
      : n_(p.length()), c_(s.conductor()), b_(prefix_sums(p)), visit_(visit), tuple_(n_) {
    const Int top = static_cast<Int>(n_) * c_;
    for (Int x = 0; x <= top; ++x)
      if (s.contains(x)) members_.push_back(x);
  }

  void run() {
    if (c_ == 0) return;  // nothing lies below the conductor of N
    if (n_ == 0) {
      visit_({}, 0);
      return;
    }
    place(0, static_cast<Int>(n_) * c_, 0);
  }

 private:
  // Chooses tuple_[i] <= upper, with the previous entries fixed and `acc` the
  // contribution of the gaps between them. Returns false once stopped.
  bool place(std::size_t i, Int upper, Int acc) {
    const Int lower = i == 0 ? 0 : std::max<Int>(0, tuple_[i - 1] - c_);
    // Feasibility: the remaining n - 1 - i steps each drop at most c and the
    // last entry is at most c.
    upper = std::min(upper, static_cast<Int>(n_ - i) * c_);
    auto it = std::upper_bound(members_.begin(), members_.end(), upper);
    while (it != members_.begin()) {
      const Int x = *--it;
      if (x < lower) break;
      Int value = acc;
      if (i > 0) value += b_[i - 1] * (tuple_[i - 1] - x);
      // acc < c always holds on entry, so this only trips when b_(i-1) > 0,
      // and smaller x only raise the image further.
      if (value >= c_) break;
      tuple_[i] = x;
      if (i + 1 == n_) {
        const Int image = value + b_[i] * x;
        if (image < c_ && !visit_(tuple_, image)) return false;
      } else if (!place(i + 1, x, value)) {
        return false;
      }
    }
    return true;
  }

  std::size_t n_;
  Int c_;
  std::vector<std::int64_t> b_;
  const Visitor& visit_;
  std::vector<Int> members_;
  std::vector<Int> tuple_;
};

std::vector<Int> constant_runs(std::initializer_list<std::pair<Int, std::size_t>> runs) {
  std::vector<Int> out;
  for (const auto& [value, count] : runs) out.insert(out.end(), count, value);
  return out;
}

// Explicit failure for a pattern with some negative prefix sum; no semigroup
// admits it.
std::vector<Int> inadmissible_counterexample(const NumericalSemigroup& s,
                                             const Pattern& p) {
  const auto b = prefix_sums(p);
  const std::size_t n = b.size();
  const std::size_t i = static_cast<std::size_t>(
      std::find_if(b.begin(), b.end(), [](auto x) { return x < 0; }) - b.begin());
  const Int base = std::max<Int>(s.conductor(), 1);
  if (i + 1 == n) return constant_runs({{base, n}});
  // p = b_i D + b_n base with the first i+1 entries raised by D.
  const Int rest = b[n - 1] * base;
  const Int lift = rest >= 0 ? rest / -b[i] + 1 : 1;
  return constant_runs({{base + lift, i + 1}, {base, n - i - 1}});
}

AdmissionDecision rejected(std::vector<Int> tuple, AdmissionMethod method) {
  return {false, std::move(tuple), method};
}

}  // namespace

void for_each_low_image(const NumericalSemigroup& s, const Pattern& p,
                        const std::function<bool(std::span<const Int>, Int)>& visit) {
  if (!classify(p).admissible)
    throw Error(ErrorKind::NotAdmissible, format_pattern(p) + " is not admissible");
  LowImageSearch(s, p, visit).run();
}

AdmissionDecision admits_oracle(const NumericalSemigroup& s, const Pattern& p) {
  if (!classify(p).admissible)
    return rejected(inadmissible_counterexample(s, p),
                    AdmissionMethod::inadmissible_pattern);
  AdmissionDecision out;
  for_each_low_image(s, p, [&](std::span<const Int> tuple, Int image) {
    if (s.contains(image)) return true;
    out = rejected({tuple.begin(), tuple.end()}, AdmissionMethod::oracle);
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Structural decision

namespace {

AdmissionDecision admits_degree_one(const NumericalSemigroup& s, const Pattern& p,
                                    const StandardDecomposition& dec) {
  const auto b = prefix_sums(p);
  const std::size_t n = p.length();
  const std::size_t t = dec.t;
  // The monoid generated by b_1..b_t must sit inside S.
  for (std::size_t i = 0; i < t; ++i) {
    if (s.contains(b[i])) continue;
    // S != N here, and c, c+1 are members; the image of this tuple is b_i.
    const Int lambda = s.conductor();
    return rejected(constant_runs({{lambda + 1, i + 1}, {lambda, t - i - 1}, {0, n - t}}),
                    AdmissionMethod::ad1_structure);
  }
  if (!dec.tail.is_zero()) {
    auto tail = admits(s, dec.tail);
    if (!tail.admits) {
      // Repeating the first tail entry over the center leaves T_p's value.
      const auto& u = *tail.counterexample;
      auto lifted = constant_runs({{u.front(), t}});
      lifted.insert(lifted.end(), u.begin(), u.end());
      return rejected(std::move(lifted), AdmissionMethod::ad1_structure);
    }
  }
  return {true, std::nullopt, AdmissionMethod::ad1_structure};
}

AdmissionDecision admits_degree_two_monic(const NumericalSemigroup& s, const Pattern& p,
                                          const StandardDecomposition& dec) {
  const auto b = prefix_sums(p);
  const std::size_t n = p.length();
  const std::size_t t = dec.t;
  // p = x1 + sum_{i<=t} (b_i - 1)(x_i - x_{i+1}) + T_p.
  for (std::size_t i = 2; i <= t; ++i) {
    const std::int64_t w = b[i - 1] - 1;
    if (w == 0) continue;
    const auto step = admits_oracle(s, Pattern({1, w, -w}));
    if (step.admits) continue;
    const auto& u = *step.counterexample;
    return rejected(constant_runs({{u[0], 1}, {u[1], i - 1}, {u[2], t - i}, {0, n - t}}),
                    AdmissionMethod::ad2_monic_structure);
  }
  std::vector<std::int64_t> lead{1};
  lead.insert(lead.end(), dec.tail.coefficients().begin(), dec.tail.coefficients().end());
  const auto rest = admits(s, Pattern(std::move(lead)));
  if (!rest.admits) {
    const auto& u = *rest.counterexample;
    auto lifted = constant_runs({{u.front(), t}});
    lifted.insert(lifted.end(), u.begin() + 1, u.end());
    return rejected(std::move(lifted), AdmissionMethod::ad2_monic_structure);
  }
  return {true, std::nullopt, AdmissionMethod::ad2_monic_structure};
}

}  // namespace

AdmissionDecision admits(const NumericalSemigroup& s, const Pattern& p) {
  const Degree ad = admissibility_degree(p);
  if (ad == 0) return admits_oracle(s, p);
  const Int m = s.multiplicity();
  const Int bound = (s.conductor() + m - 1) / m + 1;
  if (ad.at_least(bound)) return {true, std::nullopt, AdmissionMethod::conductor_bound};
  if (ad == 1) return admits_degree_one(s, p, standard_decomposition(p));
  if (ad == 2 && p.is_monic())
    return admits_degree_two_monic(s, p, standard_decomposition(p));
  return admits_oracle(s, p);
}

bool is_arf_equivalent(const Pattern& p) {
  if (!(admissibility_degree(p) == 2)) return false;
  // Only b_1..b_t count: a 2 inside the tail does not yield 2x1 - x2, and
  // x1+2x2-2x3+x4 is admitted by the non-Arf {0,3,4,6,->}.
  const auto b = prefix_sums(p);
  const auto t = static_cast<std::ptrdiff_t>(standard_decomposition(p).t);
  return std::find(b.begin(), b.begin() + t, 2) != b.begin() + t;
}

NumericalSemigroup separating_semigroup(Int k, Int c_r) {
  if (k < 1 || c_r < 1)
    throw Error(ErrorKind::InvalidArgument, "separating semigroup needs k, c_r >= 1");
  const Int q = c_r + k;
  // x = jq + r lies in <q, q+1> iff r <= j for j = x div q.
  return NumericalSemigroup::from_set(CofiniteSet::from_predicate(
      0, k * q, [q](Int x) { return x % q <= x / q; }));
}

NumericalSemigroup arf_witness_semigroup(Int q) {
  if (q <= 1) throw Error(ErrorKind::InvalidArgument, "arf witness needs q > 1");
  return NumericalSemigroup::from_set(CofiniteSet::from_predicate(
      0, q + 3, [q](Int x) { return x == 0 || x == q || x == q + 1; }));
}

}  // namespace nsgp
