#include <algorithm>
#include <random>

#include "doctest.h"
#include "kiselman/errors.hpp"
#include "kiselman/monotone.hpp"

using namespace kiselman;

TEST_SUITE("monotone") {
  TEST_CASE("monotonicity on small sequences") {
    CHECK(is_monotone(make_sequence({Subset::of({1}), Subset::of({2})})));
    CHECK_FALSE(is_monotone(make_sequence({Subset::of({2}), Subset::of({1})})));
    // X_2 \ X_1 is empty, the condition is vacuous.
    CHECK(is_monotone(make_sequence({Subset::of({1, 2}), Subset::of({2})})));
  }

  TEST_CASE("monotonicity checks all pairs, not only neighbours") {
    // Adjacent pairs pass, the pair (1, 3) fails.
    const SetSequence s = make_sequence({Subset::of({2}), Subset::of({1, 2}), Subset::of({1})});
    CHECK_FALSE(is_monotone(s));
    CHECK(pairwise_exceeds(s.at(2), s.at(1)));
    CHECK(pairwise_exceeds(s.at(3), s.at(2)));
  }

  TEST_CASE("the unit sequence") {
    CHECK(unit_sequence(1) == make_sequence({Subset::of({1})}));
    CHECK(unit_sequence(2) == make_sequence({Subset::of({1}), Subset::of({2})}));
    CHECK(unit_sequence(3) ==
          make_sequence({Subset::of({1}), Subset::of({2}), Subset::of({3})}));
    CHECK(is_monotone(unit_sequence(3)));
  }

  TEST_CASE("star against the unit is the identity map") {
    for (const SetSequence& s : enumerate_monotone(3)) {
      CHECK(star(s, unit_sequence(3)) == s);
      CHECK(star(unit_sequence(3), s) == s);
    }
  }

  TEST_CASE("a worked star product") {
    const SetSequence x = make_sequence({Subset::of({1, 2}), Subset::of({2})});
    const SetSequence y = make_sequence({Subset::of({2}), Subset::of({2})});
    // Z_i = union of X_j over j in Y_i: both components pick X_2 = {2}.
    CHECK(star(x, y) == make_sequence({Subset::of({2}), Subset::of({2})}));
  }

  TEST_CASE("star rejects rank mismatches and non-monotone operands") {
    CHECK_THROWS_AS(star(unit_sequence(2), unit_sequence(3)), std::invalid_argument);
    const SetSequence bad = make_sequence({Subset::of({2}), Subset::of({1})});
    CHECK_THROWS_AS(star(bad, unit_sequence(2)), std::invalid_argument);
    CHECK_THROWS_AS(star(unit_sequence(2), bad), std::invalid_argument);
  }

  TEST_CASE("enumeration sizes for n = 1, 2, 3") {
    CHECK(enumerate_monotone(1).size() == 2);
    CHECK(enumerate_monotone(2).size() == 15);
    CHECK(enumerate_monotone(3).size() == 330);
  }

  TEST_CASE("enumeration is sorted with X_1 most significant and is complete for n = 2") {
    const auto all = enumerate_monotone(2);
    CHECK(std::is_sorted(all.begin(), all.end()));
    // Independent filter over all (2^2)^2 = 16 candidate tuples.
    std::size_t expected = 0;
    for (std::uint32_t a = 0; a < 4; ++a) {
      for (std::uint32_t b = 0; b < 4; ++b) {
        SetSequence s;
        s.n = 2;
        s.parts = {Subset::from_bits(a), Subset::from_bits(b)};
        if (is_monotone(s)) ++expected;
      }
    }
    CHECK(all.size() == expected);
  }

  TEST_CASE("the enumeration guard trips") {
    CHECK_THROWS_AS(enumerate_monotone(5), GuardExceeded);
    CHECK_THROWS_AS(enumerate_monotone(0), std::invalid_argument);
  }

  TEST_CASE("star stays inside M_n on sampled pairs") {
    const auto all = enumerate_monotone(3);
    std::mt19937_64 rng(20240609);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const SetSequence product = star(all[pick(rng)], all[pick(rng)]);
      CHECK(is_monotone(product));
    }
  }
}
