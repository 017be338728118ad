#pragma once

#include <compare>
#include <vector>

#include "kiselman/subset.hpp"

namespace kiselman {

// An n-tuple (X_1, ..., X_n) of subsets of {1..n}.  Members of the monoid
// M_n are exactly the monotone ones; construction does not enforce that,
// is_monotone() decides it.
struct SetSequence {
  int n = 0;
  std::vector<Subset> parts;  // parts[i-1] = X_i

  Subset at(int i) const { return parts[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const SetSequence&, const SetSequence&) = default;
  // Lexicographic on the bitmask tuple, X_1 most significant.
  friend auto operator<=>(const SetSequence& a, const SetSequence& b) {
    return a.parts <=> b.parts;
  }

  std::string to_string() const;
};

SetSequence make_sequence(std::initializer_list<Subset> parts);

// True iff for all j > i every index of X_j\X_i exceeds every index of
// X_i\X_j.  The condition is pairwise and not transitive, so all pairs are
// checked, not just neighbours.
bool is_monotone(const SetSequence& s);

// The product Z with Z_i = union of X_j over j in Y_i.  Both operands must
// be monotone members of M_n; the result always is.
SetSequence star(const SetSequence& x, const SetSequence& y);

// ({1}, {2}, ..., {n}), the unit of M_n.
SetSequence unit_sequence(int n);

inline constexpr int kDefaultMonotoneGuard = 4;

// All of M_n by filtering the (2^n)^n candidate tuples, in lexicographic
// order with X_1 most significant.  Guarded: (2^n)^n grows fast.
std::vector<SetSequence> enumerate_monotone(int n, int guard = kDefaultMonotoneGuard);

}  // namespace kiselman
