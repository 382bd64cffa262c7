#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsgp/error.hpp"

namespace nsgp {

/// A linear homogeneous pattern a1 x1 + ... + an xn with nonzero integer
/// coefficients. The empty coefficient list is the zero pattern.
class Pattern {
 public:
  Pattern() = default;
  /// Throws ZeroCoefficient if any entry is 0.
  explicit Pattern(std::vector<std::int64_t> coefficients);

  std::size_t length() const { return coefficients_.size(); }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_monic() const { return !is_zero() && coefficients_.front() == 1; }
  std::int64_t operator[](std::size_t i) const { return coefficients_[i]; }
  std::span<const std::int64_t> coefficients() const { return coefficients_; }

  bool operator==(const Pattern&) const = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

/// Admissibility degree: a natural number or infinity.
class Degree {
 public:
  static constexpr Degree finite(int k) { return Degree(k); }
  static constexpr Degree infinite() { return Degree(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: finite.
  constexpr int value() const { return *value_; }
  constexpr bool at_least(std::int64_t k) const { return is_infinite() || *value_ >= k; }

  constexpr bool operator==(const Degree&) const = default;
  constexpr bool operator==(int k) const { return value_ == k; }

 private:
  constexpr Degree() = default;
  constexpr explicit Degree(int k) : value_(k) {}
  std::optional<int> value_;
};

std::string to_string(Degree d);

struct PatternClass {
  bool admissible;
  bool strongly_admissible;
};

/// Head / center / tail blocks of an admissible pattern. Indices are 1-based
/// in the numbering of the original pattern: the head covers x1..xh, the
/// center x(center_first)..xt and the tail x(t+1)..xn. When the last
/// derivation only decremented a coefficient, the head and center share the
/// variable xh and center_first == h; otherwise center_first == h + 1.
struct StandardDecomposition {
  Pattern head;
  Pattern center;
  Pattern tail;
  std::size_t h = 0;
  std::size_t center_first = 1;
  std::size_t t = 0;
  Degree degree = Degree::infinite();

  /// Coefficient-wise sum of the three blocks placed at their indices.
  Pattern reassemble() const;
};

/// Grammar: term (('+'|'-') term)*, term = [coeff] 'x' index | '0'.
/// Whitespace is ignored. Every index 1..n must occur exactly once.
Pattern parse_pattern(std::string_view text);

/// Canonical form, e.g. "x1+3x2-2x3"; the zero pattern prints as "0".
std::string format_pattern(const Pattern& p);

std::vector<std::int64_t> prefix_sums(const Pattern& p);

/// p - x1 when a1 != 1, p(0, x1, ..., x(n-1)) when a1 == 1, and 0' = 0.
Pattern derive(const Pattern& p);

Degree admissibility_degree(const Pattern& p);

PatternClass classify(const Pattern& p);

/// Throws NotAdmissible.
StandardDecomposition standard_decomposition(const Pattern& p);

/// x1 + ... + xk - x(k+1).
Pattern subtraction_pattern(int k);

/// x1 + x2 - x3.
inline Pattern arf_pattern() { return subtraction_pattern(2); }

}  // namespace nsgp
