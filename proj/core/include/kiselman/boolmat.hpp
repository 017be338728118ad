#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kiselman {

// A boolean m x n matrix stored as one bitmask per row; bit i-1 of row x
// holds the entry in row x, column i.
class BoolMatrix {
 public:
  static constexpr int max_cols = 32;

  BoolMatrix() = default;
  BoolMatrix(int rows, int cols);  // zero matrix
  BoolMatrix(std::initializer_list<std::initializer_list<int>> entries);

  static BoolMatrix identity(int n);
  // Row-major flattening: entry (x, i) sits at bit (x-1)*cols + (i-1).
  static BoolMatrix from_flat(int rows, int cols, std::uint64_t bits);
  std::uint64_t to_flat() const;  // requires rows*cols <= 64

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int row, int col) const;        // 1-based
  void set(int row, int col, bool value);  // 1-based

  std::uint32_t row_bits(int row) const { return data_[static_cast<std::size_t>(row - 1)]; }
  std::uint32_t column_bits(int col) const;  // bits over rows

  BoolMatrix transpose() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

  std::string to_string() const;  // rows joined by '|', e.g. "10|01"

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// Ascending order of the row-major flattened value (shape-major first);
// the deterministic listing order for D_n.
bool flat_less(const BoolMatrix& a, const BoolMatrix& b);

// Pattern test for one ordered column pair, on clean column masks (bits
// over rows): rows with 0 in the left column and 1 in the right form `a`,
// rows with 1 in the left and 0 in the right form `b`; the 2x2 submatrix
// [[0,1],[1,0]] is absent for this pair iff a or b is empty or every row
// of a sits strictly below every row of b.
constexpr bool column_pair_avoids(std::uint32_t left, std::uint32_t right) {
  const std::uint32_t a = ~left & right;
  const std::uint32_t b = left & ~right;
  if (a == 0 || b == 0) return true;
  // 1-based: min row of a is ctz(a)+1, max row of b is bit_width(b).
  return std::countr_zero(a) >= static_cast<int>(std::bit_width(b));
}

// True iff no 2x2 submatrix [[0,1],[1,0]] occurs (rows and columns taken in
// increasing order).  Checks every column pair, not just neighbours: the
// pairwise condition is not transitive.
bool avoids_pattern(const BoolMatrix& m);

// Boolean matrix product: c_ij = OR_k (a_ik AND b_kj).
BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix identity_matrix(int n);

// Exactly one 1 in every row and every column.
bool is_permutation_matrix(const BoolMatrix& m);

// Square and pattern-avoiding: membership in D_n.
bool in_dn(const BoolMatrix& m);

inline constexpr int kDefaultDnGuard = 5;

// All of D_n in ascending flattened order.  2^(n^2) candidates; guarded.
std::vector<BoolMatrix> enumerate_dn(int n, int guard = kDefaultDnGuard);

// |D_n| by streaming over all candidates without materializing them.
std::uint64_t count_dn(int n, int guard = kDefaultDnGuard, int parallelism = 1);

// Count of pattern-avoiding m x n boolean matrices over all 2^(m*n)
// candidates.  The workhorse behind the brute-force counting oracle;
// partitions the flattened range across workers when asked to.
std::uint64_t count_pattern_avoiding(int m, int n, int parallelism = 1);

// The invertible elements of D_n: every M in D_n admitting N in D_n with
// M*N = N*M = I.  Walks permutation matrices only (boolean matrices have no
// other two-sided inverses) and keeps those whose transpose also avoids the
// pattern.
std::vector<BoolMatrix> find_units(int n, int guard = kDefaultDnGuard);

// Slow cross-check for find_units: exhaustive search for inverse pairs over
// the full enumerated D_n.
std::vector<BoolMatrix> find_units_by_pair_search(int n, int guard = 3);

}  // namespace kiselman
