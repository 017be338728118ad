#include "kiselman/boolmat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "kiselman/errors.hpp"

namespace kiselman {

namespace {

void check_shape(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("matrix shape must be at least 1x1, got " + std::to_string(rows) +
                                "x" + std::to_string(cols));
  }
  if (cols > BoolMatrix::max_cols) {
    throw std::invalid_argument("column count " + std::to_string(cols) +
                                " exceeds the supported maximum " +
                                std::to_string(BoolMatrix::max_cols));
  }
}

void check_index(int value, int limit, const char* what) {
  if (value < 1 || value > limit) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(value) +
                                " out of range 1.." + std::to_string(limit));
  }
}

}  // namespace

BoolMatrix::BoolMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_shape(rows, cols);
  data_.assign(static_cast<std::size_t>(rows), 0u);
}

BoolMatrix::BoolMatrix(std::initializer_list<std::initializer_list<int>> entries) {
  rows_ = static_cast<int>(entries.size());
  cols_ = rows_ > 0 ? static_cast<int>(entries.begin()->size()) : 0;
  check_shape(rows_, cols_);
  data_.reserve(static_cast<std::size_t>(rows_));
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != cols_) {
      throw std::invalid_argument("ragged rows in matrix literal");
    }
    std::uint32_t bits = 0;
    int i = 0;
    for (int v : row) {
      if (v != 0 && v != 1) {
        throw std::invalid_argument("matrix entries must be 0 or 1");
      }
      bits |= static_cast<std::uint32_t>(v) << i;
      ++i;
    }
    data_.push_back(bits);
  }
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n, n);
  for (int i = 1; i <= n; ++i) {
    m.set(i, i, true);
  }
  return m;
}

BoolMatrix BoolMatrix::from_flat(int rows, int cols, std::uint64_t bits) {
  check_shape(rows, cols);
  if (rows * cols > 64) {
    throw std::invalid_argument("from_flat requires rows*cols <= 64");
  }
  BoolMatrix m(rows, cols);
  const std::uint64_t row_mask = (cols == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << cols) - 1);
  for (int r = 0; r < rows; ++r) {
    m.data_[static_cast<std::size_t>(r)] =
        static_cast<std::uint32_t>((bits >> (r * cols)) & row_mask);
  }
  return m;
}

std::uint64_t BoolMatrix::to_flat() const {
  if (rows_ * cols_ > 64) {
    throw std::invalid_argument("to_flat requires rows*cols <= 64");
  }
  std::uint64_t out = 0;
  for (int r = 0; r < rows_; ++r) {
    out |= static_cast<std::uint64_t>(data_[static_cast<std::size_t>(r)]) << (r * cols_);
  }
  return out;
}

bool BoolMatrix::get(int row, int col) const {
  check_index(row, rows_, "row");
  check_index(col, cols_, "column");
  return ((data_[static_cast<std::size_t>(row - 1)] >> (col - 1)) & 1u) != 0;
}

void BoolMatrix::set(int row, int col, bool value) {
  check_index(row, rows_, "row");
  check_index(col, cols_, "column");
  const std::uint32_t bit = std::uint32_t{1} << (col - 1);
  if (value) {
    data_[static_cast<std::size_t>(row - 1)] |= bit;
  } else {
    data_[static_cast<std::size_t>(row - 1)] &= ~bit;
  }
}

std::uint32_t BoolMatrix::column_bits(int col) const {
  check_index(col, cols_, "column");
  std::uint32_t out = 0;
  for (int r = 0; r < rows_; ++r) {
    out |= ((data_[static_cast<std::size_t>(r)] >> (col - 1)) & 1u) << r;
  }
  return out;
}

BoolMatrix BoolMatrix::transpose() const {
  if (rows_ > max_cols) {
    throw std::invalid_argument("transpose would need " + std::to_string(rows_) + " columns");
  }
  BoolMatrix t(cols_, rows_);
  for (int c = 1; c <= cols_; ++c) {
    t.data_[static_cast<std::size_t>(c - 1)] = column_bits(c);
  }
  return t;
}

std::string BoolMatrix::to_string() const {
  std::string out;
  for (int r = 1; r <= rows_; ++r) {
    if (r > 1) out += "|";
    for (int c = 1; c <= cols_; ++c) {
      out += get(r, c) ? '1' : '0';
    }
  }
  return out;
}

bool flat_less(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  // Row-major flat value: the last row carries the most significant bits.
  for (int r = a.rows(); r >= 1; --r) {
    if (a.row_bits(r) != b.row_bits(r)) return a.row_bits(r) < b.row_bits(r);
  }
  return false;
}

bool avoids_pattern(const BoolMatrix& m) {
  const int n = m.cols();
  std::uint32_t col[BoolMatrix::max_cols];
  for (int i = 0; i < n; ++i) {
    col[i] = m.column_bits(i + 1);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!column_pair_avoids(col[i], col[j])) return false;
    }
  }
  return true;
}

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("bool_mul: shape mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  BoolMatrix c(a.rows(), b.cols());
  for (int x = 1; x <= a.rows(); ++x) {
    std::uint32_t acc = 0;
    std::uint32_t picks = a.row_bits(x);
    while (picks != 0) {
      const int k = std::countr_zero(picks);
      acc |= b.row_bits(k + 1);
      picks &= picks - 1;
    }
    for (int j = 1; j <= b.cols(); ++j) {
      c.set(x, j, ((acc >> (j - 1)) & 1u) != 0);
    }
  }
  return c;
}

BoolMatrix identity_matrix(int n) {
  check_shape(n, n);
  return BoolMatrix::identity(n);
}

bool is_permutation_matrix(const BoolMatrix& m) {
  if (m.rows() != m.cols()) return false;
  std::uint32_t seen_cols = 0;
  for (int r = 1; r <= m.rows(); ++r) {
    const std::uint32_t row = m.row_bits(r);
    if (std::popcount(row) != 1) return false;
    seen_cols |= row;
  }
  return std::popcount(seen_cols) == m.rows();
}

bool in_dn(const BoolMatrix& m) { return m.rows() == m.cols() && avoids_pattern(m); }

namespace {

void check_dn_guard(int n, int guard) {
  if (n < 1) {
    throw std::invalid_argument("n must be at least 1");
  }
  if (n > guard) {
    throw GuardExceeded("D_n enumeration guard: n = " + std::to_string(n) + " exceeds " +
                        std::to_string(guard) + " (2^(n^2) candidates)");
  }
}

// Column-major flattened candidate: column k occupies bits [k*m, (k+1)*m).
// Clean masks, so column_pair_avoids applies directly.
inline bool flat_columns_avoid(std::uint64_t u, int m, int n) {
  const std::uint32_t col_mask = (std::uint32_t{1} << m) - 1;
  for (int j = 1; j < n; ++j) {
    const std::uint32_t cj = static_cast<std::uint32_t>(u >> (j * m)) & col_mask;
    for (int i = 0; i < j; ++i) {
      const std::uint32_t ci = static_cast<std::uint32_t>(u >> (i * m)) & col_mask;
      if (!column_pair_avoids(ci, cj)) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t count_pattern_avoiding(int m, int n, int parallelism) {
  check_shape(m, n);
  if (m * n > 62) {
    throw std::invalid_argument("count_pattern_avoiding: m*n must stay below 63 bits");
  }
  const std::uint64_t total = std::uint64_t{1} << (m * n);
  if (m == 1 || n == 1) {
    return total;  // no 2x2 submatrix exists
  }
  const auto worker = [m, n](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t count = 0;
    for (std::uint64_t u = lo; u < hi; ++u) {
      if (flat_columns_avoid(u, m, n)) ++count;
    }
    return count;
  };
  if (parallelism <= 1 || total < (std::uint64_t{1} << 16)) {
    return worker(0, total);
  }
  const std::uint64_t chunks = static_cast<std::uint64_t>(parallelism);
  std::vector<std::uint64_t> partial(chunks, 0);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t lo = total / chunks * c + std::min(c, total % chunks);
    const std::uint64_t hi = total / chunks * (c + 1) + std::min(c + 1, total % chunks);
    threads.emplace_back([&partial, c, lo, hi, &worker] { partial[c] = worker(lo, hi); });
  }
  for (auto& t : threads) {
    t.join();
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::vector<BoolMatrix> enumerate_dn(int n, int guard) {
  check_dn_guard(n, guard);
  std::vector<BoolMatrix> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t u = 0; u < total; ++u) {
    BoolMatrix m = BoolMatrix::from_flat(n, n, u);
    if (avoids_pattern(m)) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::uint64_t count_dn(int n, int guard, int parallelism) {
  check_dn_guard(n, guard);
  return count_pattern_avoiding(n, n, parallelism);
}

std::vector<BoolMatrix> find_units(int n, int guard) {
  check_dn_guard(n, guard);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<BoolMatrix> out;
  do {
    BoolMatrix m(n, n);
    for (int i = 1; i <= n; ++i) {
      m.set(perm[static_cast<std::size_t>(i - 1)], i, true);
    }
    if (avoids_pattern(m) && avoids_pattern(m.transpose())) {
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), flat_less);
  return out;
}

std::vector<BoolMatrix> find_units_by_pair_search(int n, int guard) {
  const std::vector<BoolMatrix> dn = enumerate_dn(n, guard);
  const BoolMatrix id = BoolMatrix::identity(n);
  std::vector<BoolMatrix> out;
  for (const BoolMatrix& m : dn) {
    for (const BoolMatrix& candidate : dn) {
      if (bool_mul(m, candidate) == id && bool_mul(candidate, m) == id) {
        out.push_back(m);
        break;
      }
    }
  }
  return out;
}

}  // namespace kiselman
