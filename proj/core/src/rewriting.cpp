#include "kiselman/rewriting.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

#include "kiselman/errors.hpp"

namespace kiselman {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::string rule_count_message(std::size_t max_rules, int n) {
  return "completion exceeded the rule cap of " + std::to_string(max_rules) + " for n = " +
         std::to_string(n) + "; no finite complete system was found within the budget";
}

}  // namespace

void RewriteSystem::add_rule(Word lhs, Word rhs) {
  assert(!lhs.empty());
  assert(shortlex_less(rhs, lhs));
  max_lhs_ = std::max(max_lhs_, lhs.size());
  by_first_[lhs.front()].push_back(rules_.size());
  rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
}

std::size_t RewriteSystem::first_match(const Word& w, std::size_t pos) const {
  const std::size_t remaining = w.size() - pos;
  for (std::size_t r : by_first_[w[pos]]) {
    const Word& lhs = rules_[r].lhs;
    if (lhs.size() <= remaining && std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
      return r;
    }
  }
  return npos;
}

Word RewriteSystem::reduce(Word w) const {
  if (rules_.empty()) return w;
  std::size_t pos = 0;
  while (pos < w.size()) {
    const std::size_t r = first_match(w, pos);
    if (r == npos) {
      ++pos;
      continue;
    }
    const RewriteRule& rule = rules_[r];
    // Splice rhs over lhs in place; rhs is never longer than lhs.
    std::copy(rule.rhs.begin(), rule.rhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos + rule.rhs.size()),
            w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()));
    // A new redex can start at most max_lhs_-1 positions to the left.
    pos = (pos + 1 > max_lhs_) ? pos + 1 - max_lhs_ : 0;
  }
  return w;
}

bool RewriteSystem::is_normal_form(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (first_match(w, pos) != npos) return false;
  }
  return true;
}

RewriteSystem make_presentation(int n) {
  check_rank(n);
  RewriteSystem rs(n);
  for (int i = 1; i <= n; ++i) {
    const Letter a = static_cast<Letter>(i);
    rs.add_rule(Word{a, a}, Word{a});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Letter ai = static_cast<Letter>(i);
      const Letter aj = static_cast<Letter>(j);
      rs.add_rule(Word{aj, ai, aj}, Word{aj, ai});
      rs.add_rule(Word{ai, aj, ai}, Word{aj, ai});
    }
  }
  return rs;
}

std::vector<std::pair<Word, Word>> defining_relations(int n) {
  check_rank(n);
  std::vector<std::pair<Word, Word>> out;
  for (int i = 1; i <= n; ++i) {
    const Letter a = static_cast<Letter>(i);
    out.emplace_back(Word{a, a}, Word{a});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Letter ai = static_cast<Letter>(i);
      const Letter aj = static_cast<Letter>(j);
      out.emplace_back(Word{ai, aj, ai}, Word{aj, ai, aj});
      out.emplace_back(Word{aj, ai, aj}, Word{aj, ai});
      out.emplace_back(Word{ai, aj, ai}, Word{aj, ai});
    }
  }
  return out;
}

// Completion internals.  Overlaps come in two shapes: a proper suffix of one
// lhs matching a proper prefix of another, and one lhs contained in another.
class CompletionDriver {
 public:
  explicit CompletionDriver(RewriteSystem& rs) : rs_(rs) {}

  template <typename Fn>
  static void for_each_overlap(const RewriteRule& a, const RewriteRule& b, bool same_rule,
                               Fn&& fn) {
    const Word& la = a.lhs;
    const Word& lb = b.lhs;
    const std::size_t kmax = std::min(la.size(), lb.size()) - 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (!std::equal(la.end() - static_cast<std::ptrdiff_t>(k), la.end(), lb.begin())) continue;
      Word origin = la;
      origin.insert(origin.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
      Word left = a.rhs;
      left.insert(left.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
      Word right(la.begin(), la.end() - static_cast<std::ptrdiff_t>(k));
      right.insert(right.end(), b.rhs.begin(), b.rhs.end());
      fn(std::move(origin), std::move(left), std::move(right));
    }
    if (lb.size() <= la.size()) {
      for (std::size_t p = 0; p + lb.size() <= la.size(); ++p) {
        if (same_rule && p == 0 && lb.size() == la.size()) continue;
        if (!std::equal(lb.begin(), lb.end(), la.begin() + static_cast<std::ptrdiff_t>(p))) {
          continue;
        }
        Word right(la.begin(), la.begin() + static_cast<std::ptrdiff_t>(p));
        right.insert(right.end(), b.rhs.begin(), b.rhs.end());
        right.insert(right.end(), la.begin() + static_cast<std::ptrdiff_t>(p + lb.size()),
                     la.end());
        fn(Word(la), Word(a.rhs), std::move(right));
      }
    }
  }

  // One full scan over ordered rule pairs present at entry.  Non-joining
  // pairs become new rules immediately, so later pairs in the same sweep
  // already reduce against them.  Returns true if anything was added.
  bool sweep(std::size_t max_rules) {
    const std::size_t count = rs_.rules_.size();
    bool added = false;
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        // Copies: additions inside the callback may reallocate the rule vector.
        const RewriteRule rule_a = rs_.rules_[a];
        const RewriteRule rule_b = rs_.rules_[b];
        for_each_overlap(rule_a, rule_b, a == b,
                         [&](Word /*origin*/, Word left, Word right) {
                           Word l = rs_.reduce(std::move(left));
                           Word r = rs_.reduce(std::move(right));
                           if (l == r) return;
                           if (shortlex_less(l, r)) l.swap(r);
                           rs_.add_rule(std::move(l), std::move(r));
                           added = true;
                           if (rs_.rules_.size() > max_rules) {
                             throw GuardExceeded(rule_count_message(max_rules, rs_.n_));
                           }
                         });
      }
    }
    return added;
  }

  // Drops rules whose two sides already join without them; such rules are
  // derivable consequences and only add noise to dumps.
  void trim_redundant() {
    bool removed = true;
    while (removed) {
      removed = false;
      for (std::size_t i = rs_.rules_.size(); i-- > 0;) {
        RewriteSystem probe(rs_.n_);
        for (std::size_t j = 0; j < rs_.rules_.size(); ++j) {
          if (j != i) probe.add_rule(rs_.rules_[j].lhs, rs_.rules_[j].rhs);
        }
        if (probe.reduce(rs_.rules_[i].lhs) == probe.reduce(rs_.rules_[i].rhs)) {
          rs_ = std::move(probe);
          removed = true;
        }
      }
    }
  }

 private:
  RewriteSystem& rs_;
};

RewriteSystem complete(RewriteSystem rs, std::size_t max_rules) {
  if (rs.complete_) return rs;
  if (rs.rules_.size() > max_rules) {
    throw GuardExceeded(rule_count_message(max_rules, rs.n_));
  }
  CompletionDriver driver(rs);
  while (driver.sweep(max_rules)) {
  }
  driver.trim_redundant();
  // Trimming keeps the congruence intact; one more closing run certifies
  // local confluence of the trimmed set (it normally adds nothing back).
  while (driver.sweep(max_rules)) {
  }
  rs.complete_ = true;
  return rs;
}

std::optional<CriticalPair> confluence_counterexample(const RewriteSystem& rs) {
  for (std::size_t a = 0; a < rs.rules_.size(); ++a) {
    for (std::size_t b = 0; b < rs.rules_.size(); ++b) {
      std::optional<CriticalPair> found;
      CompletionDriver::for_each_overlap(
          rs.rules_[a], rs.rules_[b], a == b, [&](Word origin, Word left, Word right) {
            if (found) return;
            Word l = rs.reduce(std::move(left));
            Word r = rs.reduce(std::move(right));
            if (l != r) {
              found = CriticalPair{std::move(origin), std::move(l), std::move(r), a, b};
            }
          });
      if (found) return found;
    }
  }
  return std::nullopt;
}

}  // namespace kiselman
