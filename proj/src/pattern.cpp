#include "nsgp/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

namespace nsgp {

Pattern::Pattern(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    if (coefficients_[i] == 0)
      throw Error(ErrorKind::ZeroCoefficient,
                  "coefficient of x" + std::to_string(i + 1) + " is 0");
}

std::string to_string(Degree d) {
  return d.is_infinite() ? "inf" : std::to_string(d.value());
}

// ---------------------------------------------------------------------------
// Parsing and formatting

namespace {

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  Pattern parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty pattern");
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) {
        if (first) fail("expected a term");
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      term(sign);
      first = false;
    }
    return assemble();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at position " + std::to_string(pos_), pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::optional<std::int64_t> number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = peek() - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
        fail("number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void term(int sign) {
    const std::size_t start = pos_;
    const auto coeff = number();
    skip_space();
    if (peek() != 'x') {
      if (coeff == 0) return;  // the literal 0 term
      if (coeff) fail("constant term in a homogeneous pattern");
      fail("expected coefficient or 'x'");
    }
    ++pos_;
    const std::size_t index_pos = pos_;
    const auto index = number();
    if (!index) fail("expected variable index");
    if (*index == 0)
      throw Error(ErrorKind::NonContiguousIndices, "variable index 0", index_pos);
    if (coeff == 0)
      throw Error(ErrorKind::ZeroCoefficient,
                  "coefficient of x" + std::to_string(*index) + " is 0", start);
    if (!terms_.emplace(*index, sign * coeff.value_or(1)).second)
      throw Error(ErrorKind::NonContiguousIndices,
                  "x" + std::to_string(*index) + " appears twice", index_pos);
  }

  Pattern assemble() const {
    std::vector<std::int64_t> coeffs;
    std::int64_t expected = 1;
    for (const auto& [index, coeff] : terms_) {
      if (index != expected)
        throw Error(ErrorKind::NonContiguousIndices,
                    "missing x" + std::to_string(expected));
      coeffs.push_back(coeff);
      ++expected;
    }
    return Pattern(std::move(coeffs));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::int64_t, std::int64_t> terms_;
};

}  // namespace

Pattern parse_pattern(std::string_view text) { return PatternParser(text).parse(); }

std::string format_pattern(const Pattern& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    const std::int64_t a = p[i];
    if (a < 0) out += '-';
    else if (i > 0) out += '+';
    const std::int64_t mag = a < 0 ? -a : a;
    if (mag != 1) out += std::to_string(mag);
    out += 'x' + std::to_string(i + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Calculus

std::vector<std::int64_t> prefix_sums(const Pattern& p) {
  std::vector<std::int64_t> b(p.length());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < p.length(); ++i) b[i] = acc += p[i];
  return b;
}

Pattern derive(const Pattern& p) {
  if (p.is_zero()) return p;
  auto c = p.coefficients();
  if (c[0] == 1) return Pattern({c.begin() + 1, c.end()});
  std::vector<std::int64_t> next(c.begin(), c.end());
  --next[0];
  return Pattern(std::move(next));
}

PatternClass classify(const Pattern& p) {
  const auto b = prefix_sums(p);
  return {std::all_of(b.begin(), b.end(), [](auto x) { return x >= 0; }),
          std::all_of(b.begin(), b.end(), [](auto x) { return x >= 1; })};
}

Degree admissibility_degree(const Pattern& p) {
  // Each derivation of an admissible nonzero pattern lowers a1 + ... + an
  // restricted to positive terms, so the loop ends.
  Pattern q = p;
  for (int k = 0;; ++k) {
    if (!classify(q).admissible) return Degree::finite(k);
    if (q.is_zero()) return Degree::infinite();
    q = derive(q);
  }
}

StandardDecomposition standard_decomposition(const Pattern& p) {
  const Degree ad = admissibility_degree(p);
  if (ad == 0)
    throw Error(ErrorKind::NotAdmissible, format_pattern(p) + " is not admissible");
  const std::size_t n = p.length();
  StandardDecomposition out;
  out.degree = ad;
  if (ad.is_infinite()) {
    out.head = p;
    out.h = n;
    out.center_first = n + 1;
    out.t = n;
    return out;
  }

  // Replay the ad(p) - 1 derivations, charging each removed unit to the head.
  std::vector<std::int64_t> rest(p.coefficients().begin(), p.coefficients().end());
  std::vector<std::int64_t> head(n, 0);
  std::size_t first = 0;
  for (int step = 0; step < ad.value() - 1; ++step) {
    ++head[first];
    if (--rest[first] == 0) ++first;
  }
  std::size_t h = 0;
  while (h < n && head[h] > 0) ++h;

  // p^(k) = rest[first..n) has a zero prefix sum; t is the last one.
  std::size_t t = first;
  std::int64_t acc = 0;
  for (std::size_t i = first; i < n; ++i)
    if ((acc += rest[i]) == 0) t = i + 1;

  out.head = Pattern({head.begin(), head.begin() + static_cast<std::ptrdiff_t>(h)});
  out.center = Pattern({rest.begin() + static_cast<std::ptrdiff_t>(first),
                        rest.begin() + static_cast<std::ptrdiff_t>(t)});
  out.tail = Pattern({rest.begin() + static_cast<std::ptrdiff_t>(t), rest.end()});
  out.h = h;
  out.center_first = first + 1;
  out.t = t;
  return out;
}

Pattern StandardDecomposition::reassemble() const {
  const std::size_t n = t + tail.length();
  std::vector<std::int64_t> sum(n, 0);
  for (std::size_t i = 0; i < head.length(); ++i) sum[i] += head[i];
  for (std::size_t i = 0; i < center.length(); ++i) sum[center_first - 1 + i] += center[i];
  for (std::size_t i = 0; i < tail.length(); ++i) sum[t + i] += tail[i];
  return Pattern(std::move(sum));
}

Pattern subtraction_pattern(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "subtraction pattern needs k >= 1");
  std::vector<std::int64_t> c(static_cast<std::size_t>(k), 1);
  c.push_back(-1);
  return Pattern(std::move(c));
}

}  // namespace nsgp
