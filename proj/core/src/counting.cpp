#include "kiselman/counting.hpp"

#include <array>
#include <cstdint>
#include <vector>

#include "kiselman/boolmat.hpp"
#include "kiselman/errors.hpp"

namespace kiselman {

BigRational rational_power(int base, int exp) {
  if (base == 0) {
    throw std::invalid_argument("rational_power: zero base");
  }
  BigInt mag = 1;
  for (int i = 0; i < (exp < 0 ? -exp : exp); ++i) {
    mag *= base;
  }
  if (exp >= 0) {
    return BigRational(mag);
  }
  return BigRational(BigInt(1), mag);
}

std::string to_string(CountSource source) {
  return source == CountSource::closed_formula ? "closed_formula" : "brute_force";
}

namespace {

struct ClosedFormula {
  std::vector<std::int64_t> coeffs;  // polynomial in n, ascending degree
  std::int64_t prefactor_denominator;
  int base;
  int exponent_offset;  // the power is base^(n - offset)
};

// Row m = 2..5 of the closed counting formulas.
const ClosedFormula& formula_for(int m) {
  static const std::array<ClosedFormula, 4> table = {{
      // (3 + n) * 3^(n-1)
      {{3, 1}, 1, 3, 1},
      // 1/3 * (2 + n)(96 + 31 n + n^2) * 4^(n-3), expanded:
      // 192 + 158 n + 33 n^2 + n^3
      {{192, 158, 33, 1}, 3, 4, 3},
      // 1/36 * (2812500 + 3963450 n + 1862971 n^2 + 339300 n^3 + 21265 n^4
      //         + 510 n^5 + 4 n^6) * 5^(n-7)
      {{2812500, 3963450, 1862971, 339300, 21265, 510, 4}, 36, 5, 7},
      // 1/350 * (4571242905600 + 9431397663120 n + 7249916118636 n^2
      //          + 2618093085240 n^3 + 466294991825 n^4 + 41039857215 n^5
      //          + 1926425298 n^6 + 50381010 n^7 + 729825 n^8 + 5415 n^9
      //          + 16 n^10) * 6^(n-13)
      {{4571242905600, 9431397663120, 7249916118636, 2618093085240, 466294991825, 41039857215,
        1926425298, 50381010, 729825, 5415, 16},
       350,
       6,
       13},
  }};
  return table[static_cast<std::size_t>(m - 2)];
}

BigInt evaluate_polynomial(const std::vector<std::int64_t>& coeffs, int n) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * n + *it;
  }
  return acc;
}

}  // namespace

CountResult closed_count(int m, int n) {
  if (m < 2 || m > 5) {
    throw std::invalid_argument("closed_count: formulas cover m = 2..5, got m = " +
                                std::to_string(m));
  }
  if (n < 1) {
    throw std::invalid_argument("closed_count: n must be at least 1");
  }
  const ClosedFormula& f = formula_for(m);
  const BigRational value = BigRational(evaluate_polynomial(f.coeffs, n), f.prefactor_denominator) *
                            rational_power(f.base, n - f.exponent_offset);
  if (boost::multiprecision::denominator(value) != 1) {
    throw NonIntegralFormula("closed_count(" + std::to_string(m) + ", " + std::to_string(n) +
                             ") evaluated to the non-integral value " + value.str());
  }
  BigInt result = boost::multiprecision::numerator(value);
  if (result < 1) {
    throw NonIntegralFormula("closed_count(" + std::to_string(m) + ", " + std::to_string(n) +
                             ") evaluated to the non-positive value " + result.str());
  }
  if (result > (BigInt(1) << (static_cast<unsigned>(m) * static_cast<unsigned>(n)))) {
    throw NonIntegralFormula("closed_count(" + std::to_string(m) + ", " + std::to_string(n) +
                             ") exceeds the 2^(m*n) ceiling");
  }
  return CountResult{m, n, std::move(result), CountSource::closed_formula};
}

CountResult brute_count(int m, int n, int guard_bits, int parallelism) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("brute_count: shape must be at least 1x1");
  }
  if (m * n > guard_bits) {
    throw GuardExceeded("brute_count: " + std::to_string(m) + "x" + std::to_string(n) + " needs " +
                        std::to_string(m * n) + " bits, over the guard of " +
                        std::to_string(guard_bits));
  }
  const std::uint64_t count = count_pattern_avoiding(m, n, parallelism);
  return CountResult{m, n, BigInt(count), CountSource::brute_force};
}

CountResult dn_cardinality(int n) {
  if (n < 1) {
    throw std::invalid_argument("dn_cardinality: n must be at least 1");
  }
  if (n > 5) {
    throw std::invalid_argument("dn_cardinality: no closed formula for n = " + std::to_string(n));
  }
  if (n == 1) {
    // Both 1x1 matrices avoid the pattern.
    return CountResult{1, 1, BigInt(2), CountSource::closed_formula};
  }
  return closed_count(n, n);
}

}  // namespace kiselman
