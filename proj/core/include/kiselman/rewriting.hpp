#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "kiselman/word.hpp"

namespace kiselman {

// One oriented rule lhs -> rhs with rhs strictly shortlex-smaller than lhs.
struct RewriteRule {
  Word lhs;
  Word rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

// An overlap of two rule left sides: reducing `origin` with one rule or the
// other yields `left` and `right`.  The system is locally confluent iff every
// such pair reduces to a common word.
struct CriticalPair {
  Word origin;
  Word left;
  Word right;
  std::size_t rule_a = 0;
  std::size_t rule_b = 0;
};

inline constexpr std::size_t kDefaultMaxRules = 10'000;

// A string rewriting system over the alphabet {1..n}.  Rules are kept
// shortlex-oriented, so rewriting always terminates; `complete()` closes the
// set under critical pairs, after which normal forms are unique per
// congruence class.
class RewriteSystem {
 public:
  int alphabet_size() const { return n_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool is_complete() const { return complete_; }

  // Leftmost-innermost rewriting to a fixed point.  Deterministic for any
  // rule set; yields the canonical normal form once the system is complete.
  Word reduce(Word w) const;

  bool is_normal_form(const Word& w) const;

 private:
  RewriteSystem(int n) : n_(n) {}

  void add_rule(Word lhs, Word rhs);
  std::size_t first_match(const Word& w, std::size_t pos) const;  // npos if none

  int n_ = 0;
  bool complete_ = false;
  std::vector<RewriteRule> rules_;
  std::size_t max_lhs_ = 0;
  // Rule indices bucketed by first letter of lhs, in insertion order.
  std::array<std::vector<std::size_t>, kMaxRank + 1> by_first_{};

  friend RewriteSystem make_presentation(int n);
  friend RewriteSystem complete(RewriteSystem rs, std::size_t max_rules);
  friend std::optional<CriticalPair> confluence_counterexample(const RewriteSystem& rs);
  friend class CompletionDriver;
};

// The defining presentation: for every i, a_i a_i -> a_i, and for every
// i < j the two oriented braid rules a_j a_i a_j -> a_j a_i and
// a_i a_j a_i -> a_j a_i.
RewriteSystem make_presentation(int n);

// Knuth-Bendix style pair completion under the shortlex order.  Throws
// GuardExceeded if the rule count passes max_rules, which signals that the
// finite-completion assumption failed for this alphabet size.
RewriteSystem complete(RewriteSystem rs, std::size_t max_rules = kDefaultMaxRules);

// Scans every critical pair of the current rule set; returns one whose sides
// reduce to distinct normal forms, or nullopt if all pairs resolve.
std::optional<CriticalPair> confluence_counterexample(const RewriteSystem& rs);

// The unoriented defining relations of the presentation, as word pairs whose
// normal forms must coincide in a sound completed system.
std::vector<std::pair<Word, Word>> defining_relations(int n);

}  // namespace kiselman
