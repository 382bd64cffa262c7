#include "nsgp/literals.hpp"

#include <charconv>

namespace nsgp {

namespace {

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// Splits "kind:payload"; throws ParseError when the colon is missing.
std::pair<std::string_view, std::string_view> split_literal(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::ParseError,
                "literal '" + std::string(text) + "' has no kind prefix", 0);
  return {text.substr(0, colon), text.substr(colon + 1)};
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, end - pos);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || item.front() == '-' || item.front() == '+' || ec != std::errc() ||
        ptr != item.data() + item.size())
      throw Error(ErrorKind::ParseError,
                  "'" + std::string(item) + "' is not a decimal natural", pos);
    out.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

NumericalSemigroup parse_semigroup_literal(std::string_view text) {
  const auto [kind, payload] = split_literal(text);
  const auto values = parse_int_list(payload);
  if (kind == "gen") return semigroup_from_generators(values);
  if (kind == "gaps") return semigroup_from_gap_set(values);
  throw Error(ErrorKind::ParseError, "unknown semigroup literal kind '" + std::string(kind) + "'", 0);
}

SemigroupIdeal parse_ideal_literal(const NumericalSemigroup& s, std::string_view text) {
  const auto [kind, payload] = split_literal(text);
  const auto values = parse_int_list(payload);
  if (kind == "offset") {
    if (values.size() != 1)
      throw Error(ErrorKind::ParseError, "offset: takes exactly one value", kind.size() + 1);
    return principal_ideal(s, values.front());
  }
  if (kind == "igen") return ideal_from_generators(s, values);
  throw Error(ErrorKind::ParseError, "unknown ideal literal kind '" + std::string(kind) + "'", 0);
}

std::string format_semigroup(const NumericalSemigroup& s) {
  return "gen:" + join(s.minimal_generators());
}

std::string format_ideal(const SemigroupIdeal& e) {
  if (e.generators().size() == 1) return "offset:" + std::to_string(e.generators().front());
  return "igen:" + join(e.generators());
}

}  // namespace nsgp
