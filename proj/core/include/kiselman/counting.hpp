#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace kiselman {

// All counting arithmetic is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// base^exp as an exact rational; exp may be negative.
BigRational rational_power(int base, int exp);

// A closed formula produced a value that is not a positive integer for some
// n; that can only mean its coefficients were transcribed wrong.
class NonIntegralFormula : public std::logic_error {
 public:
  explicit NonIntegralFormula(const std::string& what) : std::logic_error(what) {}
};

enum class CountSource { closed_formula, brute_force };

std::string to_string(CountSource source);

struct CountResult {
  int m = 0;
  int n = 0;
  BigInt value;
  CountSource source = CountSource::closed_formula;
};

// Exact evaluation of the closed formula for the number of pattern-avoiding
// m x n boolean matrices, m in 2..5.  The prefactors 1/3, 1/36, 1/350 and
// the powers 4^(n-3), 5^(n-7), 6^(n-13) make intermediate values genuinely
// rational for small n; the final value is asserted to be a positive
// integer.
CountResult closed_count(int m, int n);

inline constexpr int kDefaultGuardBits = 25;

// Independent oracle: count pattern-avoiding matrices over all 2^(m*n)
// candidates.  Guarded by the bit budget m*n <= guard_bits.
CountResult brute_count(int m, int n, int guard_bits = kDefaultGuardBits, int parallelism = 1);

// |D_n| for n <= 5: the trivial n = 1 case, closed_count(n, n) otherwise.
CountResult dn_cardinality(int n);

}  // namespace kiselman
