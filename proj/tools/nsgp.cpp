// nsgp: command-line front-end for the pattern library.
//
// Exit status: 0 on success, 1 on a domain error, 2 on a usage error
// (unknown flag, missing option, malformed literal or number).

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsgp/admission.hpp"
#include "nsgp/duplication.hpp"
#include "nsgp/literals.hpp"
#include "nsgp/variety.hpp"

using namespace nsgp;
using json = nlohmann::ordered_json;

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(std::span<const Int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

// Like format_pattern, but the first variable is x_first.
std::string format_block(const Pattern& p, std::size_t first) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    const auto a = p[i];
    if (a < 0) out += '-';
    else if (i > 0) out += '+';
    if (a != 1 && a != -1) out += std::to_string(a < 0 ? -a : a);
    out += 'x' + std::to_string(i + first);
  }
  return out;
}

Int single_value(const std::string& text, const char* flag) {
  const auto xs = parse_int_list(text);
  if (xs.size() != 1) throw UsageError(std::string(flag) + " takes exactly one integer");
  return xs.front();
}

Int genus_cap() {
  const char* env = std::getenv("NSGP_GENUS_CAP");
  if (env == nullptr || *env == '\0') return kDefaultGenusCap;
  try {
    return single_value(env, "NSGP_GENUS_CAP");
  } catch (const Error&) {
    throw UsageError("NSGP_GENUS_CAP must be a decimal integer");
  }
}

json semigroup_json(const NumericalSemigroup& s) {
  return {{"semigroup", format_semigroup(s)},
          {"multiplicity", s.multiplicity()},
          {"conductor", s.conductor()},
          {"frobenius", s.frobenius()},
          {"genus", s.genus()},
          {"gaps", s.gaps()},
          {"minimal_generators", s.minimal_generators()},
          {"arf", is_arf(s)}};
}

std::string semigroup_text(const NumericalSemigroup& s) {
  std::ostringstream out;
  out << "semigroup: " << format_semigroup(s) << '\n'
      << "multiplicity: " << s.multiplicity() << '\n'
      << "conductor: " << s.conductor() << '\n'
      << "frobenius: " << s.frobenius() << '\n'
      << "genus: " << s.genus() << '\n'
      << "gaps: " << join(s.gaps()) << '\n'
      << "minimal_generators: " << join(s.minimal_generators()) << '\n'
      << "arf: " << (is_arf(s) ? "true" : "false") << '\n';
  return out.str();
}

// Emits either the JSON object or the text rendering.
struct Output {
  bool json_mode = false;
  std::ostream& os;

  void emit(const json& j, const std::string& text) const {
    if (json_mode) os << j.dump() << '\n';
    else os << text;
  }
};

// ---------------------------------------------------------------------------
// Subcommands

void sgp_info(const Output& out, const std::string& sgp) {
  const auto s = parse_semigroup_literal(sgp);
  out.emit(semigroup_json(s), semigroup_text(s));
}

void pattern_info(const Output& out, const std::string& text) {
  const auto p = parse_pattern(text);
  const auto b = prefix_sums(p);
  const auto ad = admissibility_degree(p);
  const auto cls = classify(p);
  json j{{"pattern", format_pattern(p)},
         {"prefix_sums", b},
         {"ad", ad.is_infinite() ? json("inf") : json(ad.value())},
         {"admissible", cls.admissible},
         {"strongly_admissible", cls.strongly_admissible},
         {"monic", p.is_monic()}};
  std::ostringstream t;
  t << "pattern: " << format_pattern(p) << '\n'
    << "prefix_sums: " << join(b) << '\n'
    << "ad: " << to_string(ad) << '\n'
    << "admissible: " << (cls.admissible ? "true" : "false") << '\n'
    << "strongly_admissible: " << (cls.strongly_admissible ? "true" : "false") << '\n'
    << "monic: " << (p.is_monic() ? "true" : "false") << '\n';
  if (cls.admissible) {
    const auto d = standard_decomposition(p);
    const auto head = format_block(d.head, 1);
    const auto center = format_block(d.center, d.center_first);
    const auto tail = format_block(d.tail, d.t + 1);
    j["decomposition"] = {{"H", head}, {"C", center}, {"T", tail}, {"h", d.h}, {"t", d.t}};
    t << "H: " << head << '\n'
      << "C: " << center << '\n'
      << "T: " << tail << '\n'
      << "h: " << d.h << '\n'
      << "t: " << d.t << '\n';
  }
  out.emit(j, t.str());
}

void admits_cmd(const Output& out, const std::string& sgp, const std::string& pattern,
                bool use_oracle) {
  const auto s = parse_semigroup_literal(sgp);
  const auto p = parse_pattern(pattern);
  const auto d = use_oracle ? admits_oracle(s, p) : admits(s, p);
  json j{{"admits", d.admits}, {"method", to_string(d.method)}};
  std::string t = d.admits ? "true\n" : "false\n";
  if (d.counterexample) {
    j["counterexample"] = *d.counterexample;
    j["image"] = eval_pattern(p, *d.counterexample);
    t += "counterexample: " + join(*d.counterexample) + '\n' +
         "image: " + std::to_string(eval_pattern(p, *d.counterexample)) + '\n';
  }
  t += "method: " + std::string(to_string(d.method)) + '\n';
  out.emit(j, t);
}

void arf_equiv(const Output& out, const std::string& pattern) {
  const auto p = parse_pattern(pattern);
  const bool eq = is_arf_equivalent(p);
  json j{{"arf_equivalent", eq}};
  std::string t = eq ? "true\n" : "false\n";
  if (!eq && admissibility_degree(p) == 2) {
    // Separating semigroup: admits p, not Arf.
    const auto b = prefix_sums(p);
    const Int q = *std::max_element(b.begin(), b.end()) + 2;
    const auto w = arf_witness_semigroup(q);
    j["witness"] = format_semigroup(w);
    t += "witness: " + format_semigroup(w) + '\n';
  }
  out.emit(j, t);
}

void closure(const Output& out, const std::string& sgp, const std::string& pattern) {
  const auto c = p_closure(parse_semigroup_literal(sgp), parse_pattern(pattern));
  out.emit(semigroup_json(c), semigroup_text(c));
}

void tree(const Output& out, const std::string& pattern, const std::string& genus, bool list) {
  const auto p = parse_pattern(pattern);
  const auto result = enumerate_by_genus(p, single_value(genus, "--genus"), list, genus_cap());
  json j{{"pattern", format_pattern(p)}, {"counts", result.counts}};
  std::ostringstream t;
  std::uint64_t total = 0;
  for (std::size_t g = 0; g < result.counts.size(); ++g) {
    t << "genus " << g << ": " << result.counts[g] << '\n';
    total += result.counts[g];
  }
  t << "total: " << total << '\n';
  j["total"] = total;
  if (list) {
    json nodes = json::array();
    for (const auto& n : result.nodes) {
      nodes.push_back({{"semigroup", format_semigroup(n.semigroup)},
                       {"genus", n.genus},
                       {"gaps", n.semigroup.gaps()},
                       {"parent_frobenius", n.parent_frobenius ? json(*n.parent_frobenius) : json()}});
      t << n.genus << ' ' << format_semigroup(n.semigroup) << " gaps:" << join(n.semigroup.gaps())
        << '\n';
    }
    j["nodes"] = nodes;
  }
  out.emit(j, t.str());
}

void duplicate(const Output& out, const std::string& sgp, const std::string& ideal,
               const std::string& d) {
  const auto s = parse_semigroup_literal(sgp);
  const auto dup = duplication(s, parse_ideal_literal(s, ideal), single_value(d, "--d"));
  out.emit(semigroup_json(dup), semigroup_text(dup));
}

void quotient_cmd(const Output& out, const std::string& sgp, const std::string& k) {
  const auto q = quotient(parse_semigroup_literal(sgp), single_value(k, "--k"));
  out.emit(semigroup_json(q), semigroup_text(q));
}

void eventual_cmd(const Output& out, const std::string& sgp, const std::string& ideal,
                  const std::string& pattern) {
  const auto s = parse_semigroup_literal(sgp);
  const auto e = parse_ideal_literal(s, ideal);
  const auto dec = eventual(s, e, parse_pattern(pattern));
  const std::string verdict = dec.eventually_admits
                                  ? (*dec.eventually_admits ? "true" : "false")
                                  : "undetermined";
  json j{{"eventually_admits", dec.eventually_admits ? json(*dec.eventually_admits) : json()},
         {"reason", to_string(dec.reason)},
         {"threshold_d", dec.threshold_d ? json(*dec.threshold_d) : json()},
         {"failing_condition", dec.failing_condition ? json(*dec.failing_condition) : json()}};
  std::ostringstream t;
  t << "eventually_admits: " << verdict << '\n' << "reason: " << to_string(dec.reason) << '\n';
  if (dec.threshold_d) t << "threshold_d: " << *dec.threshold_d << '\n';
  if (dec.failing_condition) t << "failing_condition: " << *dec.failing_condition << '\n';
  out.emit(j, t.str());
}

void dtable(const Output& out, const std::string& sgp, const std::string& ideal,
            const std::string& pattern, const std::string& ds, bool lines) {
  const auto s = parse_semigroup_literal(sgp);
  const auto e = parse_ideal_literal(s, ideal);
  const auto values = parse_int_list(ds);
  if (values.empty()) throw UsageError("--d needs at least one value");
  const auto table = d_table(s, e, parse_pattern(pattern), values);
  json rows = json::array();
  for (const auto& r : table.rows) rows.push_back({{"d", r.d}, {"admits", r.admits}});
  const json j{{"S", format_semigroup(table.s)},
               {"E", format_ideal(table.e)},
               {"p", format_pattern(table.p)},
               {"rows", rows}};
  out.emit(j, lines ? format_dtable_lines(table) : format_dtable_text(table));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear patterns on numerical semigroups"};
  app.name("nsgp");
  app.require_subcommand(1);
  app.fallthrough();

  bool json_mode = false;
  app.add_flag("--json", json_mode, "Emit one JSON object");

  std::string sgp, ideal, pattern, d, k, genus;
  bool use_oracle = false, list = false, lines = false;

  auto want_sgp = [&](CLI::App* c) {
    c->add_option("--sgp", sgp, "Semigroup literal, gen:3,5 or gaps:1,2,4,7")->required();
  };
  auto want_pattern = [&](CLI::App* c) {
    c->add_option("--pattern", pattern, "Pattern such as x1+x2-x3")->required();
  };
  auto want_ideal = [&](CLI::App* c) {
    c->add_option("--ideal", ideal, "Ideal literal, offset:3 or igen:3,5")->required();
  };

  auto* c_sgp = app.add_subcommand("sgp-info", "Invariants of a semigroup");
  want_sgp(c_sgp);
  auto* c_pat = app.add_subcommand("pattern-info", "Prefix sums, degree and decomposition");
  want_pattern(c_pat);
  auto* c_adm = app.add_subcommand("admits", "Does S admit p");
  want_sgp(c_adm);
  want_pattern(c_adm);
  c_adm->add_flag("--oracle", use_oracle, "Use the exhaustive search only");
  auto* c_arf = app.add_subcommand("arf-equiv", "Is p equivalent to x1+x2-x3");
  want_pattern(c_arf);
  auto* c_clo = app.add_subcommand("closure", "Smallest semigroup containing S admitting p");
  want_sgp(c_clo);
  want_pattern(c_clo);
  auto* c_tree = app.add_subcommand("tree", "Count the variety of p by genus");
  want_pattern(c_tree);
  c_tree->add_option("--genus", genus, "Largest genus")->required();
  c_tree->add_flag("--list", list, "Print every semigroup");
  auto* c_dup = app.add_subcommand("duplicate", "Numerical duplication of S by E at d");
  want_sgp(c_dup);
  want_ideal(c_dup);
  c_dup->add_option("--d", d, "Odd member of S")->required();
  auto* c_quo = app.add_subcommand("quotient", "S/k");
  want_sgp(c_quo);
  c_quo->add_option("--k", k, "Positive integer")->required();
  auto* c_ev = app.add_subcommand("eventual", "Eventual admission of the duplication");
  want_sgp(c_ev);
  want_ideal(c_ev);
  want_pattern(c_ev);
  auto* c_dt = app.add_subcommand("dtable", "Admission of the duplication for listed d");
  want_sgp(c_dt);
  want_ideal(c_dt);
  want_pattern(c_dt);
  c_dt->add_option("--d", d, "Comma-separated odd members of S")->required();
  c_dt->add_flag("--lines", lines, "One d=<n> admits=<bool> line per row");

  CLI::App* failing = &app;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands()) failing = sub;
    std::cerr << "error: " << e.what() << "\n\n" << failing->help();
    return kUsageError;
  }

  const Output out{json_mode, std::cout};
  try {
    if (*c_sgp) sgp_info(out, sgp);
    else if (*c_pat) pattern_info(out, pattern);
    else if (*c_adm) admits_cmd(out, sgp, pattern, use_oracle);
    else if (*c_arf) arf_equiv(out, pattern);
    else if (*c_clo) closure(out, sgp, pattern);
    else if (*c_tree) tree(out, pattern, genus, list);
    else if (*c_dup) duplicate(out, sgp, ideal, d);
    else if (*c_quo) quotient_cmd(out, sgp, k);
    else if (*c_ev) eventual_cmd(out, sgp, ideal, pattern);
    else if (*c_dt) dtable(out, sgp, ideal, pattern, d, lines);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kUsageError : kDomainError;
  }
  return 0;
}
