#include "doctest.h"

#include "nsgp/semigroup.hpp"
#include "oracles.hpp"

using namespace nsgp;

namespace {

std::vector<Int> v(std::initializer_list<Int> xs) { return xs; }

NumericalSemigroup gen(std::initializer_list<Int> xs) {
  return semigroup_from_generators(std::vector<Int>(xs));
}

}  // namespace

TEST_CASE("semigroup_from_generators") {
  SUBCASE("<1> is N") {
    const auto n = gen({1});
    CHECK(n == NumericalSemigroup());
    CHECK(n.conductor() == 0);
    CHECK(n.genus() == 0);
    CHECK(n.frobenius() == -1);
  }
  SUBCASE("<3,5> agrees with the combination oracle") {
    const auto s = gen({3, 5});
    const auto members = oracle::combinations_up_to({3, 5}, 30);
    for (Int x = 0; x <= 30; ++x) CHECK(s.contains(x) == static_cast<bool>(members.count(x)));
    CHECK(s.members_below_conductor() == v({0, 3, 5, 6}));
    CHECK(s.frobenius() == 7);
    CHECK(s.genus() == 4);
  }
  SUBCASE("gcd must be one") {
    const std::vector<Int> bad{2, 4};
    CHECK_THROWS_AS(semigroup_from_generators(bad), Error);
    try {
      semigroup_from_generators(bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GcdNotOne);
    }
  }
  SUBCASE("redundant generators") {
    CHECK(gen({3, 5, 6, 10}) == gen({3, 5}));
    CHECK(gen({3, 5, 6, 10}).minimal_generators() == v({3, 5}));
  }
  SUBCASE("invalid input") {
    CHECK_THROWS_AS(semigroup_from_generators(std::vector<Int>{}), Error);
    CHECK_THROWS_AS(semigroup_from_generators(std::vector<Int>{0, 1}), Error);
  }
}

TEST_CASE("semigroup_from_gap_set") {
  CHECK(semigroup_from_gap_set(std::vector<Int>{}) == NumericalSemigroup());
  CHECK(semigroup_from_gap_set(v({1, 2, 4, 7})) == gen({3, 5}));
  // {1, 3} is the gap set of <2, 5>.
  CHECK(semigroup_from_gap_set(v({1, 3})) == gen({2, 5}));
  try {
    semigroup_from_gap_set(v({1, 4}));
    FAIL("expected NotASemigroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASemigroup);
    CHECK(std::string(e.what()).find("2 + 2 = 4") != std::string::npos);
  }
  try {
    semigroup_from_gap_set(v({0, 1}));
    FAIL("expected NotASemigroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASemigroup);
  }
}

TEST_CASE("contains") {
  const auto s = gen({3, 5});
  CHECK(NumericalSemigroup().contains(1));
  CHECK_FALSE(s.contains(7));
  CHECK(s.contains(100));
  CHECK_FALSE(s.contains(-3));
  CHECK(s.contains(0));
}

TEST_CASE("basic_invariants") {
  SUBCASE("N") {
    const auto inv = basic_invariants(NumericalSemigroup());
    CHECK(inv.multiplicity == 1);
    CHECK(inv.conductor == 0);
    CHECK(inv.genus == 0);
    CHECK(inv.minimal_generators == v({1}));
  }
  SUBCASE("<3,5>") {
    const auto inv = basic_invariants(gen({3, 5}));
    CHECK(inv.multiplicity == 3);
    CHECK(inv.conductor == 8);
    CHECK(inv.frobenius == 7);
    CHECK(inv.genus == 4);
    CHECK(inv.gaps == v({1, 2, 4, 7}));
  }
  SUBCASE("<3,19,20> against the combination oracle") {
    const auto members = oracle::combinations_up_to({3, 19, 20}, 60);
    std::vector<Int> gaps;
    for (Int x = 0; x <= 60; ++x)
      if (!members.count(x)) gaps.push_back(x);
    const auto inv = basic_invariants(gen({3, 19, 20}));
    CHECK(inv.multiplicity == 3);
    CHECK(inv.gaps == gaps);
    CHECK(inv.gaps == v({1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17}));
    CHECK(inv.conductor == 18);
    CHECK(inv.genus == 12);
    CHECK(inv.minimal_generators == v({3, 19, 20}));
  }
}

TEST_CASE("quotient") {
  const auto s = gen({3, 5});
  CHECK(quotient(s, 1) == s);
  const auto half = quotient(s, 2);
  for (Int x = 0; x < 20; ++x) CHECK(half.contains(x) == s.contains(2 * x));
  CHECK(half.members_below_conductor() == v({0}));
  CHECK(half.conductor() == 3);
  CHECK_THROWS_AS(quotient(s, 0), Error);
}

TEST_CASE("ideals") {
  const auto s = gen({3, 19, 20});
  SUBCASE("E = 0 + S is S") {
    const auto e = principal_ideal(s, 0);
    CHECK(e.min() == 0);
    CHECK(e.conductor() == s.conductor());
    for (Int x = 0; x < 40; ++x) CHECK(e.contains(x) == s.contains(x));
  }
  SUBCASE("3 + S") {
    const auto e = principal_ideal(s, 3);
    CHECK(e.min() == 3);
    CHECK(e.conductor() == 21);
    for (Int x = 0; x < 60; ++x) CHECK(e.contains(x) == s.contains(x - 3));
  }
  SUBCASE("union of translates") {
    const auto t = gen({3, 5});
    const auto e = ideal_from_generators(t, v({3, 5}));
    CHECK(e.elements().members_below_conductor() == v({3, 5, 6}));
    CHECK(e.conductor() == 8);
    CHECK(e.min() == 3);
  }
  SUBCASE("generators must be members") {
    try {
      ideal_from_generators(s, v({3, 4}));
      FAIL("expected NotInSemigroup");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotInSemigroup);
    }
  }
}

TEST_CASE("ideal_difference") {
  oracle::Gen g(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = g.semigroup(8);
    // Principal ideals: E - E = S.
    auto members = s.members_below_conductor();
    members.push_back(s.conductor());
    const Int offset = members[static_cast<std::size_t>(
        g.uniform(0, static_cast<Int>(members.size()) - 1))];
    const auto principal = principal_ideal(s, offset);
    const auto pp = ideal_difference(principal, principal);
    for (Int z = -5; z < 3 * s.conductor() + 5; ++z) CHECK(pp.contains(z) == s.contains(z));

    // General ideals: a semigroup containing S, checked by scan.
    const auto e = g.ideal(s, 2 * s.conductor() + 3);
    const auto ee = ideal_difference(e, e);
    const Int top = e.conductor() + s.conductor() + 5;
    CHECK(ee.contains(0));
    CHECK(ee.min() == 0);
    CHECK(ee.conductor() <= e.conductor() - e.min());
    for (Int z = 0; z < top; ++z) {
      bool by_scan = true;
      for (Int y = 0; y < top + z; ++y)
        if (e.contains(y) && !e.contains(y + z)) by_scan = false;
      CHECK(ee.contains(z) == by_scan);
      if (s.contains(z)) CHECK(ee.contains(z));
    }
    for (Int x = 0; x < top; ++x)
      for (Int y = 0; y < top; ++y)
        if (ee.contains(x) && ee.contains(y)) CHECK(ee.contains(x + y));
  }
  SUBCASE("E - F may start below zero") {
    const auto s = gen({3, 5});
    const auto d = ideal_difference(principal_ideal(s, 0), principal_ideal(s, 3));
    CHECK(d.min() == -3);
    CHECK(d.contains(-3));
    CHECK_FALSE(d.contains(-2));
  }
}

TEST_CASE("duplication") {
  SUBCASE("N with d = 1") {
    const NumericalSemigroup n;
    CHECK(duplication(n, principal_ideal(n, 0), 1) == n);
  }
  SUBCASE("<3,5>, E = S, d = 3 against the explicit union") {
    const auto s = gen({3, 5});
    const auto dup = duplication(s, principal_ideal(s, 0), 3);
    for (Int x = 0; x < 60; ++x) {
      const bool expected = (x % 2 == 0 && s.contains(x / 2)) ||
                            (x % 2 == 1 && x >= 3 && s.contains((x - 3) / 2));
      CHECK(dup.contains(x) == expected);
    }
    CHECK(dup.conductor() == 18);
  }
  SUBCASE("d preconditions") {
    const auto s = gen({3, 5});
    const auto e = principal_ideal(s, 0);
    auto kind_of = [&](Int d) {
      try {
        duplication(s, e, d);
      } catch (const Error& err) {
        return err.kind();
      }
      return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of(6) == ErrorKind::DNotOdd);
    CHECK(kind_of(7) == ErrorKind::DNotInS);
    CHECK(kind_of(1) == ErrorKind::DNotInS);
    CHECK(kind_of(-3) == ErrorKind::DNotOdd);
    CHECK_THROWS_AS(duplication(gen({2, 3}), e, 3), Error);
  }
  SUBCASE("conductor and halving on a random panel") {
    oracle::Gen g(5);
    for (int trial = 0; trial < 100; ++trial) {
      const auto s = g.semigroup(8);
      const auto e = g.ideal(s, 2 * s.conductor() + 2);
      const Int d = next_odd_member(s, g.uniform(0, 3 * s.conductor() + 5));
      const auto dup = duplication(s, e, d);
      CHECK(dup.conductor() == 2 * e.conductor() + d - 1);
      CHECK(quotient(dup, 2) == s);
    }
  }
}

TEST_CASE("is_arf") {
  CHECK(is_arf(NumericalSemigroup()));
  CHECK(is_arf(gen({2, 3})));
  CHECK_FALSE(is_arf(semigroup_from_gap_set(v({1, 2, 3, 4, 7}))));
  CHECK_FALSE(is_arf(gen({3, 5})));
  for (Int g = 0; g <= 7; ++g)
    for (const auto& gaps : oracle::gap_sets_of_genus(g))
      CHECK(is_arf(semigroup_from_gap_set(gaps)) == oracle::arf_by_triples(gaps));
}

TEST_CASE("round trips and closure") {
  oracle::Gen g(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = g.semigroup(10);
    CHECK(semigroup_from_gap_set(s.gaps()) == s);
    CHECK(semigroup_from_generators(s.minimal_generators()) == s);
    const auto members = s.members_below_conductor();
    for (Int x : members)
      for (Int y : members)
        if (x + y < s.conductor()) CHECK(s.contains(x + y));
    if (!s.is_naturals()) CHECK_FALSE(s.contains(s.frobenius()));
  }
}

TEST_CASE("next_odd_member") {
  const auto s = gen({3, 5});
  CHECK(next_odd_member(s, 0) == 3);
  CHECK(next_odd_member(s, 4) == 5);
  CHECK(next_odd_member(s, 6) == 9);
  CHECK(next_odd_member(NumericalSemigroup(), -10) == 1);
}
