#pragma once

#include <vector>

#include "kiselman/boolmat.hpp"
#include "kiselman/elements.hpp"
#include "kiselman/monotone.hpp"
#include "kiselman/subset.hpp"
#include "kiselman/word.hpp"

namespace kiselman {

// A monoid endomorphism of K_n, stored by the contents of the generator
// images: images[i-1] = c(phi(a_i)), so phi(a_i) = e_{images[i-1]}.  The
// stored tuple is always monotone; idempotents are determined by their
// content, so nothing is lost.
struct Endomorphism {
  int n = 0;
  std::vector<Subset> images;

  Subset image_of(int i) const { return images[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
  friend auto operator<=>(const Endomorphism& a, const Endomorphism& b) {
    return a.images <=> b.images;
  }
};

// A generator-image tuple with no monotonicity promise; the raw material of
// the brute-force search.
struct CandidateMap {
  int n = 0;
  std::vector<Subset> images;
};

Endomorphism identity_endomorphism(int n);

// The content sequence (c(phi(a_1)), ..., c(phi(a_n))).
SetSequence phi(const Endomorphism& f);

// The unique endomorphism with phi(a_i) = e_{X_i}; rejects non-monotone
// input, for which no endomorphism exists.
Endomorphism endo_from_sequence(const SetSequence& s);

// Substitute each letter a_k of w by the descending word on images[k],
// concatenate and reduce.
Element apply(const KiselmanMonoid& monoid, const Endomorphism& f, const Word& w);

// Decides via the word oracle whether the images b_i = e_{images[i]} satisfy
// all defining relations of K_n; no monotonicity shortcut is taken.
bool is_endomorphism(const KiselmanMonoid& monoid, const CandidateMap& candidate);

// g after f, by the closed union formula: images[i] = union of g.images[j]
// over j in f.images[i].
Endomorphism compose(const Endomorphism& g, const Endomorphism& f);

inline constexpr int kDefaultEndoGuard = 4;

// The full endomorphism monoid found by relation-checking every one of the
// (2^n)^n candidate maps; deliberately independent of the monotonicity
// characterization so it can confirm it.
std::vector<Endomorphism> brute_force_endomorphisms(const KiselmanMonoid& monoid,
                                                    int guard = kDefaultEndoGuard);

// The same monoid via the characterization: one endomorphism per monotone
// sequence, in sequence order.
std::vector<Endomorphism> endomorphisms_from_monotone(int n, int guard = kDefaultEndoGuard);

// The matrix whose i-th column is the characteristic vector of X_i.
BoolMatrix psi(const SetSequence& s);

// Column supports of a member of D_n; inverse of psi.
SetSequence psi_inv(const BoolMatrix& m);

}  // namespace kiselman
