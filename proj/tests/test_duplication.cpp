#include "doctest.h"

#include "nsgp/duplication.hpp"
#include "nsgp/literals.hpp"
#include "oracles.hpp"

using namespace nsgp;

namespace {

std::vector<Int> v(std::initializer_list<Int> xs) { return xs; }
Pattern pat(std::initializer_list<std::int64_t> c) { return Pattern(std::vector<std::int64_t>(c)); }

std::vector<bool> admits_column(const DTable& t) {
  std::vector<bool> out;
  for (const auto& row : t.rows) out.push_back(row.admits);
  return out;
}

// First `count` odd members of S at or above `from`.
std::vector<Int> odd_members_from(const NumericalSemigroup& s, Int from, int count) {
  std::vector<Int> out;
  for (Int d = next_odd_member(s, from); static_cast<int>(out.size()) < count;
       d = next_odd_member(s, d + 1))
    out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("d-tables") {
  SUBCASE("S = <3,19,20>, E = 3+S, p = 3x1-x2") {
    const auto s = semigroup_from_generators(v({3, 19, 20}));
    const auto e = principal_ideal(s, 3);
    const auto ds = v({3, 9, 15, 19, 21, 23, 25, 27, 29});
    const auto t = d_table(s, e, pat({3, -1}), ds);
    CHECK(admits_column(t) ==
          std::vector<bool>{true, true, true, false, true, false, false, true, true});
  }
  SUBCASE("S = <5,8,19,22>, E = 5+S, p = 4x1-x2-x3") {
    const auto s = semigroup_from_generators(v({5, 8, 19, 22}));
    const auto e = principal_ideal(s, 5);
    const auto ds = v({5, 13, 15, 19, 21, 23, 25, 27, 29});
    const auto t = d_table(s, e, pat({4, -1, -1}), ds);
    CHECK(admits_column(t) ==
          std::vector<bool>{false, true, false, true, false, false, true, true, true});
  }
}

TEST_CASE("d-table formatting") {
  const auto s = semigroup_from_generators(v({3, 5}));
  const auto e = principal_ideal(s, 0);
  const DTable t{s, e, arf_pattern(), {{3, true}, {11, false}}};
  CHECK(format_dtable_text(t) ==
        "S = gen:3,5\n"
        "E = offset:0\n"
        "p = x1+x2-x3\n"
        " d | admits p\n"
        "---+-----------\n"
        " 3 | ✓\n"
        "11 |\n");
  CHECK(format_dtable_lines(t) == "d=3 admits=true\nd=11 admits=false\n");
}

TEST_CASE("eventual_threshold") {
  const auto s = semigroup_from_generators(v({3, 19, 20}));
  const auto e = principal_ideal(s, 3);
  // max(36 - 6 + 1, 42 - 12, 42 - 6) = 36, next odd member 37.
  CHECK(eventual_threshold(s, e) == 37);
  const auto n = NumericalSemigroup();
  CHECK(eventual_threshold(n, principal_ideal(n, 0)) == 1);
}

TEST_CASE("condition checks") {
  const auto s = semigroup_from_generators(v({3, 5}));
  const auto e = principal_ideal(s, 0);
  SUBCASE("argument validation") {
    auto kind = [](auto&& f) {
      try {
        f();
      } catch (const Error& err) {
        return err.kind();
      }
      return ErrorKind::ParseError;
    };
    CHECK(kind([&] { ad2_coefficient_conditions(e, pat({1, 1, 1, -1})); }) == ErrorKind::WrongDegree);
    CHECK(kind([&] { ad2_coefficient_conditions(e, pat({2, -1})); }) == ErrorKind::NotMonic);
    CHECK(kind([&] { p_prime_image_check(s, e, arf_pattern()); }) == ErrorKind::WrongDegree);
    CHECK(kind([&] { p_prime_image_check(s, e, pat({3, -1})); }) == ErrorKind::NotMonic);
    CHECK(kind([&] { necessary_conditions_ad2(s, e, pat({3, -1})); }) == ErrorKind::WrongDegree);
    CHECK(kind([&] { eventually_admits(s, e, pat({2, -1})); }) == ErrorKind::NotMonic);
    CHECK(kind([&] { nonmonic_eventual(s, e, arf_pattern()); }) == ErrorKind::IsMonic);
    CHECK(kind([&] { eventual(s, e, pat({-1, 2})); }) == ErrorKind::NotAdmissible);
  }
  SUBCASE("Arf pattern: b2 = 2 needs c(E) - min(E) <= 1") {
    const auto cond = ad2_coefficient_conditions(e, arf_pattern());
    CHECK_FALSE(cond.holds);
    CHECK(cond.failing_index == 2u);
    const auto n = NumericalSemigroup();
    CHECK(ad2_coefficient_conditions(principal_ideal(n, 0), arf_pattern()).holds);
  }
  SUBCASE("p' image with E = S is admission of p' by S") {
    oracle::Gen g(9);
    for (int trial = 0; trial < 150; ++trial) {
      const auto t = g.semigroup(8);
      Pattern p;
      do p = g.pattern(4, 3);
      while (!p.is_monic() || !admissibility_degree(p).at_least(3));
      const auto check = p_prime_image_check(t, principal_ideal(t, 0), p);
      const auto q = derive(p);
      CHECK(check.holds == admits_oracle(t, q).admits);
      if (!check.holds) {
        REQUIRE(check.witness.has_value());
        for (Int x : *check.witness) CHECK(t.contains(x));
        CHECK_FALSE(t.contains(eval_pattern(q, *check.witness)));
      }
    }
  }
}

TEST_CASE("eventual verdicts against direct admission") {
  oracle::Gen g(2718);
  int decided = 0, positive = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto s = g.semigroup(5);
    const auto e = g.ideal(s, s.conductor() + 3);
    const auto p = g.admissible_pattern(3, 3);
    const auto dec = eventual(s, e, p);
    REQUIRE(dec.threshold_d.has_value());
    if (dec.eventually_admits.has_value()) {
      ++decided;
      positive += *dec.eventually_admits;
      if (*dec.eventually_admits == false) CHECK(dec.failing_condition.has_value());
    }
    for (Int d : odd_members_from(s, *dec.threshold_d, 3)) {
      const bool direct = admits_for_d(s, e, p, d).admits;
      if (dec.eventually_admits.has_value()) CHECK(direct == *dec.eventually_admits);
      // Refutations from necessary conditions are sound.
      if (dec.reason == EventualCase::refuted_necessary) CHECK_FALSE(direct);
    }
  }
  CHECK(decided > 60);
  CHECK(positive > 5);
}

TEST_CASE("non-monic degree >= 3 is eventually admitted") {
  const auto s = semigroup_from_generators(v({3, 19, 20}));
  const auto e = principal_ideal(s, 3);
  const auto dec = nonmonic_eventual(s, e, pat({3, -1}));
  REQUIRE(dec.eventually_admits.has_value());
  CHECK(*dec.eventually_admits);
  CHECK(dec.reason == EventualCase::ad3_nonmonic);
  // The table shows 27 and 29 admitting; the threshold is 2c(E) - 4min(E) = 30, rounded to 31.
  CHECK(*dec.threshold_d == 31);
  for (Int d : odd_members_from(s, 31, 4)) CHECK(admits_for_d(s, e, pat({3, -1}), d).admits);
}

TEST_CASE("duplication halves back to S") {
  oracle::Gen g(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = g.semigroup(7);
    const auto p = g.admissible_pattern(3, 3);
    const auto e = g.ideal(s, s.conductor() + 2);
    const Int d = next_odd_member(s, g.uniform(0, 2 * s.conductor() + 3));
    if (admits_for_d(s, e, p, d).admits) CHECK(admits(s, p).admits);
  }
}

TEST_CASE("smaller cases") {
  const NumericalSemigroup n;
  oracle::Gen g(21);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(admits_for_d(n, principal_ideal(n, 0), g.admissible_pattern(4, 3), 1).admits);

  const auto s = semigroup_from_generators(v({3, 4, 5}));
  const auto e = principal_ideal(s, 0);
  CHECK(d_table(s, e, arf_pattern(), std::vector<Int>{}).rows.empty());
  CHECK_THROWS_AS(d_table(s, e, arf_pattern(), v({3, 6})), Error);

  // Arf S, E = S, degree 3: decided by the p' image.
  const auto dec = eventually_admits(s, e, pat({1, 1, 1, -1}));
  CHECK(dec.eventually_admits == true);
  CHECK(dec.reason == EventualCase::ad3_monic);

  // Monic degree 1 is only admitted by N, and the duplication is N only for E = N, d = 1.
  CHECK(eventually_admits(s, e, pat({1, -1, 1})).reason == EventualCase::refuted_necessary);
  const auto ad1 = eventually_admits(n, principal_ideal(n, 2), pat({1, -1, 1}));
  CHECK(ad1.eventually_admits == false);
  CHECK(ad1.reason == EventualCase::ad1_requires_N);
}

TEST_CASE("necessary conditions for non-monic degree 2") {
  // 2x1+x2-2x3: b = (2,3,1). With E = S, E - E = S misses floor(b1/2) = 1.
  const auto s = semigroup_from_generators(v({4, 5}));
  const auto p = pat({2, 1, -2});
  REQUIRE(admissibility_degree(p) == 2);
  const auto e = principal_ideal(s, 0);
  CHECK_FALSE(ideal_difference(e, e).contains(1));
  const auto cond = necessary_conditions_ad2(s, e, p);
  CHECK_FALSE(cond.holds);
  CHECK(cond.failing_index == 1u);
  const auto dec = nonmonic_eventual(s, e, p);
  if (dec.reason == EventualCase::refuted_necessary) {
    CHECK(dec.eventually_admits == false);
    for (Int d : odd_members_from(s, *dec.threshold_d, 3)) CHECK_FALSE(admits_for_d(s, e, p, d).admits);
  }
}
