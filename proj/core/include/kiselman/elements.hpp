#pragma once

#include <cstddef>
#include <vector>

#include "kiselman/rewriting.hpp"
#include "kiselman/subset.hpp"
#include "kiselman/word.hpp"

namespace kiselman {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

// An element of K_n, identified by its shortlex-minimal normal form.
struct Element {
  Word nf;
  int n = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

inline bool shortlex_less(const Element& a, const Element& b) {
  return shortlex_less(a.nf, b.nf);
}

// Normal form of w under a completed system.
Element reduce(const RewriteSystem& rs, const Word& w);

// Concatenate-then-reduce.  Associative with the empty word as unit.
Element multiply(const RewriteSystem& rs, const Element& a, const Element& b);

bool is_idempotent(const RewriteSystem& rs, const Element& x);

// Right-multiplication closure from the unit: the full carrier of K_n as
// normal forms, in shortlex order.  Throws GuardExceeded past cap.
std::vector<Element> enumerate_elements(const RewriteSystem& rs, std::size_t cap);

// The three equivalent conditions on a pair (X, Y): the product e_X e_Y is
// an idempotent, it equals e_{X∪Y}, and every index of X\Y exceeds every
// index of Y\X.  The first two are decided by the word oracle, the third
// combinatorially; they must agree.
struct TfaeResult {
  bool product_idempotent = false;
  bool product_equals_union = false;
  bool combinatorial = false;

  bool all_agree() const {
    return product_idempotent == product_equals_union && product_equals_union == combinatorial;
  }
};
TfaeResult tfae_check(const RewriteSystem& rs, Subset x, Subset y);

// The two sides of the idempotent braid identity: the combinatorial
// condition on (X, Y) versus "e_X e_Y is idempotent and
// e_X e_Y e_X = e_Y e_X e_Y = e_X e_Y" decided by the word oracle.
struct BraidResult {
  bool combinatorial = false;
  bool word_identities = false;

  bool agree() const { return combinatorial == word_identities; }
};
BraidResult braid_check(const RewriteSystem& rs, Subset x, Subset y);

// Owns a completed rewriting system for one rank and exposes the element
// arithmetic on top of it.  Immutable after construction, safe to share.
class KiselmanMonoid {
 public:
  explicit KiselmanMonoid(int n, std::size_t max_rules = kDefaultMaxRules)
      : system_(complete(make_presentation(n), max_rules)) {}

  int rank() const { return system_.alphabet_size(); }
  const RewriteSystem& system() const { return system_; }

  Element reduce(const Word& w) const { return kiselman::reduce(system_, w); }
  Element multiply(const Element& a, const Element& b) const {
    return kiselman::multiply(system_, a, b);
  }
  Element unit() const { return Element{Word{}, rank()}; }
  Element generator(int i) const;
  // The element e_X; its normal form is the descending word on X.
  Element idempotent(Subset x) const;
  bool is_idempotent(const Element& x) const { return kiselman::is_idempotent(system_, x); }
  std::vector<Element> elements(std::size_t cap = kDefaultElementCap) const {
    return enumerate_elements(system_, cap);
  }
  TfaeResult tfae_check(Subset x, Subset y) const {
    return kiselman::tfae_check(system_, x, y);
  }
  BraidResult braid_check(Subset x, Subset y) const {
    return kiselman::braid_check(system_, x, y);
  }

 private:
  RewriteSystem system_;
};

}  // namespace kiselman
