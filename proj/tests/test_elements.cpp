#include <algorithm>

#include "doctest.h"
#include "kiselman/elements.hpp"
#include "kiselman/errors.hpp"
#include "test_oracles.hpp"

using namespace kiselman;

TEST_SUITE("elements") {
  TEST_CASE("reduce squares, braids and the empty word") {
    const KiselmanMonoid k(2);
    CHECK(k.reduce(Word{1, 1}).nf == Word{1});
    CHECK(k.reduce(Word{1, 2, 1}).nf == Word{2, 1});
    CHECK(k.reduce(Word{}).nf == Word{});
  }

  TEST_CASE("reduce rejects letters out of range and incomplete systems") {
    const KiselmanMonoid k(2);
    CHECK_THROWS_AS(k.reduce(Word{3}), std::invalid_argument);
    CHECK_THROWS_AS(k.reduce(Word{0}), std::invalid_argument);
    const RewriteSystem raw = make_presentation(2);
    CHECK_THROWS_AS(reduce(raw, Word{1}), std::invalid_argument);
  }

  TEST_CASE("multiplication follows the presentation") {
    const KiselmanMonoid k(2);
    const Element a1 = k.generator(1);
    const Element a2 = k.generator(2);
    const Element a2a1 = k.multiply(a2, a1);
    CHECK(a2a1.nf == Word{2, 1});
    CHECK(k.multiply(a1, a2a1) == a2a1);
    CHECK(k.multiply(k.unit(), a2a1) == a2a1);
    CHECK(k.multiply(a2a1, k.unit()) == a2a1);
  }

  TEST_CASE("multiplication rejects mismatched ranks") {
    const KiselmanMonoid k2(2);
    const KiselmanMonoid k3(3);
    CHECK_THROWS_AS(k2.multiply(k2.unit(), k3.unit()), std::invalid_argument);
  }

  TEST_CASE("content collects occurring indices") {
    CHECK(content(Word{2, 1, 2}) == Subset::of({1, 2}));
    CHECK(content(Word{}) == Subset{});
    CHECK(content(Word{3, 1}) == Subset::of({1, 3}));
  }

  TEST_CASE("idempotent words descend") {
    CHECK(idempotent_word(Subset::of({1, 3})) == Word{3, 1});
    CHECK(idempotent_word(Subset{}) == Word{});
    CHECK(idempotent_word(Subset::of({2})) == Word{2});
  }

  TEST_CASE("idempotency of elements") {
    const KiselmanMonoid k(2);
    CHECK(k.is_idempotent(k.reduce(Word{2, 1})));
    CHECK_FALSE(k.is_idempotent(k.reduce(Word{1, 2})));
    CHECK(k.is_idempotent(k.unit()));
  }

  TEST_CASE("K_1 and K_2 enumerate to the expected carriers") {
    const KiselmanMonoid k1(1);
    const auto e1 = k1.elements();
    REQUIRE(e1.size() == 2);
    CHECK(e1[0].nf == Word{});
    CHECK(e1[1].nf == Word{1});

    const KiselmanMonoid k2(2);
    const auto e2 = k2.elements();
    REQUIRE(e2.size() == 5);
    CHECK(e2[0].nf == Word{});
    CHECK(e2[1].nf == Word{1});
    CHECK(e2[2].nf == Word{2});
    CHECK(e2[3].nf == Word{1, 2});
    CHECK(e2[4].nf == Word{2, 1});
  }

  TEST_CASE("enumeration is shortlex-sorted and respects its cap") {
    const KiselmanMonoid k(3);
    const auto all = k.elements();
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const Element& a, const Element& b) { return shortlex_less(a, b); }));
    CHECK_THROWS_AS(k.elements(4), GuardExceeded);
  }

  TEST_CASE("K_3 holds exactly 2^3 idempotents") {
    const KiselmanMonoid k(3);
    std::size_t count = 0;
    for (const Element& e : k.elements()) {
      if (k.is_idempotent(e)) ++count;
    }
    CHECK(count == 8);
  }

  TEST_CASE("the bounded congruence oracle agrees with the rewriting engine") {
    for (int n = 1; n <= 3; ++n) {
      const KiselmanMonoid k(n);
      const testing::ThueOracle oracle(n, n <= 2 ? 7 : 8);
      // Census over classes with a short representative: every normal form
      // is such a representative, and the oracle bound leaves joining room.
      const auto all = k.elements();
      int longest_nf = 0;
      for (const Element& e : all) {
        longest_nf = std::max(longest_nf, static_cast<int>(e.nf.size()));
      }
      REQUIRE(longest_nf + 3 <= (n <= 2 ? 7 : 8));
      CHECK(oracle.class_count_with_rep_at_most(longest_nf) == all.size());
      // Equality agrees in both directions on all short word pairs.
      std::vector<Word> probes;
      Word w;
      const int probe_len = 4;
      probes.push_back(w);
      for (int len = 1; len <= probe_len; ++len) {
        w.assign(static_cast<std::size_t>(len), Letter{1});
        for (;;) {
          probes.push_back(w);
          int pos = len - 1;
          while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) {
            w[static_cast<std::size_t>(pos)] = 1;
            --pos;
          }
          if (pos < 0) break;
          ++w[static_cast<std::size_t>(pos)];
        }
      }
      for (const Word& u : probes) {
        for (const Word& v : probes) {
          CHECK(oracle.equal(u, v) == (k.reduce(u) == k.reduce(v)));
        }
      }
    }
  }

  TEST_CASE("K_3 has 18 elements") {
    // Pinned from the congruence oracle run above; kept as an explicit census.
    CHECK(KiselmanMonoid(3).elements().size() == 18);
  }

  TEST_CASE("the three equivalent conditions on subset pairs") {
    const KiselmanMonoid k(2);
    const TfaeResult good = k.tfae_check(Subset::of({2}), Subset::of({1}));
    CHECK(good.product_idempotent);
    CHECK(good.product_equals_union);
    CHECK(good.combinatorial);

    const TfaeResult bad = k.tfae_check(Subset::of({1}), Subset::of({2}));
    CHECK_FALSE(bad.product_idempotent);
    CHECK_FALSE(bad.product_equals_union);
    CHECK_FALSE(bad.combinatorial);

    for (std::uint32_t bits = 0; bits < 4; ++bits) {
      const Subset x = Subset::from_bits(bits);
      const TfaeResult same = k.tfae_check(x, x);
      CHECK(same.product_idempotent);
      CHECK(same.product_equals_union);
      CHECK(same.combinatorial);
    }
  }

  TEST_CASE("the braid identity check and its combinatorial twin") {
    const KiselmanMonoid k(3);
    const BraidResult good = k.braid_check(Subset::of({2}), Subset::of({1}));
    CHECK(good.combinatorial);
    CHECK(good.word_identities);

    const BraidResult bad = k.braid_check(Subset::of({1}), Subset::of({2}));
    CHECK_FALSE(bad.combinatorial);
    CHECK_FALSE(bad.word_identities);

    for (std::uint32_t bits = 0; bits < 8; ++bits) {
      const BraidResult empty_x = k.braid_check(Subset{}, Subset::from_bits(bits));
      CHECK(empty_x.combinatorial);
      CHECK(empty_x.word_identities);
    }
  }

  TEST_CASE("tfae and braid reject subsets outside {1..n}") {
    const KiselmanMonoid k(2);
    CHECK_THROWS_AS(k.tfae_check(Subset::of({3}), Subset{}), std::invalid_argument);
    CHECK_THROWS_AS(k.braid_check(Subset{}, Subset::of({5})), std::invalid_argument);
  }
}
