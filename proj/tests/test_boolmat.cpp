#include <algorithm>
#include <random>

#include "doctest.h"
#include "kiselman/boolmat.hpp"
#include "kiselman/errors.hpp"

using namespace kiselman;

namespace {

// Direct evaluation of c_ij = OR_k (a_ik AND b_kj), entry by entry.
BoolMatrix reference_product(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix c(a.rows(), b.cols());
  for (int i = 1; i <= a.rows(); ++i) {
    for (int j = 1; j <= b.cols(); ++j) {
      bool v = false;
      for (int k = 1; k <= a.cols(); ++k) {
        v = v || (a.get(i, k) && b.get(k, j));
      }
      c.set(i, j, v);
    }
  }
  return c;
}

// Literal scan for the forbidden 2x2 submatrix, quadruple loop.
bool reference_avoids(const BoolMatrix& m) {
  for (int x = 1; x <= m.rows(); ++x) {
    for (int y = x + 1; y <= m.rows(); ++y) {
      for (int i = 1; i <= m.cols(); ++i) {
        for (int j = i + 1; j <= m.cols(); ++j) {
          if (!m.get(x, i) && m.get(x, j) && m.get(y, i) && !m.get(y, j)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("boolmat") {
  TEST_CASE("the forbidden pattern itself is detected") {
    CHECK_FALSE(avoids_pattern(BoolMatrix{{0, 1}, {1, 0}}));
    CHECK(avoids_pattern(BoolMatrix::identity(2)));
    CHECK(avoids_pattern(BoolMatrix{{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}));
  }

  TEST_CASE("the pattern check agrees with a literal submatrix scan") {
    for (int rows = 1; rows <= 4; ++rows) {
      for (int cols = 1; rows * cols <= 12; ++cols) {
        const std::uint64_t total = std::uint64_t{1} << (rows * cols);
        for (std::uint64_t u = 0; u < total; ++u) {
          const BoolMatrix m = BoolMatrix::from_flat(rows, cols, u);
          CHECK(avoids_pattern(m) == reference_avoids(m));
        }
      }
    }
  }

  TEST_CASE("boolean product against the reference evaluation") {
    const BoolMatrix a{{0, 1}, {1, 1}};
    const BoolMatrix b{{1, 0}, {1, 1}};
    const BoolMatrix expected{{1, 1}, {1, 1}};
    CHECK(bool_mul(a, b) == expected);
    CHECK(reference_product(a, b) == expected);

    std::mt19937_64 rng(0xb001);
    for (int trial = 0; trial < 200; ++trial) {
      const BoolMatrix x = BoolMatrix::from_flat(3, 4, rng() & 0xFFF);
      const BoolMatrix y = BoolMatrix::from_flat(4, 2, rng() & 0xFF);
      CHECK(bool_mul(x, y) == reference_product(x, y));
    }
  }

  TEST_CASE("identity and zero behave as unit and absorber") {
    const BoolMatrix id = identity_matrix(2);
    const BoolMatrix zero(2, 2);
    for (const BoolMatrix& m : enumerate_dn(2)) {
      CHECK(bool_mul(id, m) == m);
      CHECK(bool_mul(m, id) == m);
      CHECK(bool_mul(zero, m) == zero);
      CHECK(bool_mul(m, zero) == zero);
    }
    CHECK(avoids_pattern(identity_matrix(3)));
  }

  TEST_CASE("product shape checks") {
    CHECK_THROWS_AS(bool_mul(BoolMatrix(2, 3), BoolMatrix(2, 3)), std::invalid_argument);
  }

  TEST_CASE("D_1 and D_2 enumerate completely and in ascending flat order") {
    const auto d1 = enumerate_dn(1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == BoolMatrix(1, 1));
    CHECK(d1[1] == BoolMatrix{{1}});

    const auto d2 = enumerate_dn(2);
    CHECK(d2.size() == 15);  // of the 16 candidates only the pattern itself fails
    CHECK(std::none_of(d2.begin(), d2.end(),
                       [](const BoolMatrix& m) { return m == BoolMatrix{{0, 1}, {1, 0}}; }));
    CHECK(std::is_sorted(d2.begin(), d2.end(), flat_less));
  }

  TEST_CASE("D_3 has 330 members and the census matches the streaming count") {
    const auto d3 = enumerate_dn(3);
    CHECK(d3.size() == 330);
    CHECK(count_dn(3) == 330);
    CHECK(count_dn(4) == enumerate_dn(4).size());
  }

  TEST_CASE("the flat counter matches the materializing filter") {
    for (const auto& [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 3}}) {
      std::uint64_t direct = 0;
      const std::uint64_t total = std::uint64_t{1} << (m * n);
      for (std::uint64_t u = 0; u < total; ++u) {
        if (avoids_pattern(BoolMatrix::from_flat(m, n, u))) ++direct;
      }
      CHECK(count_pattern_avoiding(m, n) == direct);
    }
  }

  TEST_CASE("permutation matrices") {
    CHECK(is_permutation_matrix(BoolMatrix::identity(3)));
    // A transposition matrix is a permutation matrix, yet not in D_2.
    const BoolMatrix swap{{0, 1}, {1, 0}};
    CHECK(is_permutation_matrix(swap));
    CHECK_FALSE(in_dn(swap));
    CHECK_FALSE(is_permutation_matrix(BoolMatrix{{1, 1}, {0, 1}}));
  }

  TEST_CASE("the unit group of D_n is trivial") {
    CHECK(find_units(1) == std::vector<BoolMatrix>{BoolMatrix{{1}}});
    for (int n = 2; n <= 4; ++n) {
      const auto units = find_units(n);
      REQUIRE(units.size() == 1);
      CHECK(units.front() == BoolMatrix::identity(n));
    }
    for (int n = 1; n <= 3; ++n) {
      CHECK(find_units_by_pair_search(n) == find_units(n));
    }
  }

  TEST_CASE("transpose symmetry of the pattern on all 3x3 matrices") {
    for (std::uint64_t u = 0; u < 512; ++u) {
      const BoolMatrix m = BoolMatrix::from_flat(3, 3, u);
      CHECK(avoids_pattern(m) == avoids_pattern(m.transpose()));
    }
  }

  TEST_CASE("flat round trips and accessors") {
    std::mt19937_64 rng(0xf1a7);
    for (int trial = 0; trial < 100; ++trial) {
      const std::uint64_t u = rng() & 0xFFFF;
      const BoolMatrix m = BoolMatrix::from_flat(4, 4, u);
      CHECK(m.to_flat() == u);
      const BoolMatrix t = m.transpose();
      for (int r = 1; r <= 4; ++r) {
        for (int c = 1; c <= 4; ++c) {
          CHECK(m.get(r, c) == t.get(c, r));
        }
      }
      CHECK(m.transpose().transpose() == m);
    }
  }

  TEST_CASE("guards and argument checks") {
    CHECK_THROWS_AS(enumerate_dn(6), GuardExceeded);
    CHECK_THROWS_AS(enumerate_dn(0), std::invalid_argument);
    CHECK_THROWS_AS(BoolMatrix(0, 2), std::invalid_argument);
    CHECK_THROWS_AS((BoolMatrix{{0, 2}}), std::invalid_argument);
    CHECK_FALSE(in_dn(BoolMatrix(2, 3)));
  }
}
