#include "kiselman/elements.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "kiselman/errors.hpp"

namespace kiselman {

namespace {

void require_complete(const RewriteSystem& rs) {
  if (!rs.is_complete()) {
    throw std::invalid_argument("rewriting system is not completed; normal forms would not be unique");
  }
}

void require_subset(Subset x, int n, const char* name) {
  if (!x.within(n)) {
    throw std::invalid_argument(std::string(name) + " = " + x.to_string() +
                                " is not a subset of {1.." + std::to_string(n) + "}");
  }
}

}  // namespace

Element reduce(const RewriteSystem& rs, const Word& w) {
  require_complete(rs);
  check_letters(w, rs.alphabet_size());
  return Element{rs.reduce(w), rs.alphabet_size()};
}

Element multiply(const RewriteSystem& rs, const Element& a, const Element& b) {
  require_complete(rs);
  if (a.n != b.n || a.n != rs.alphabet_size()) {
    throw std::invalid_argument("multiply: operands of rank " + std::to_string(a.n) + " and " +
                                std::to_string(b.n) + " under a system of rank " +
                                std::to_string(rs.alphabet_size()));
  }
  return Element{rs.reduce(concat(a.nf, b.nf)), a.n};
}

bool is_idempotent(const RewriteSystem& rs, const Element& x) {
  return multiply(rs, x, x) == x;
}

std::vector<Element> enumerate_elements(const RewriteSystem& rs, std::size_t cap) {
  require_complete(rs);
  const int n = rs.alphabet_size();
  auto cmp = [](const Word& a, const Word& b) { return shortlex_less(a, b); };
  std::set<Word, decltype(cmp)> seen(cmp);
  std::deque<Word> queue;
  seen.insert(Word{});
  queue.push_back(Word{});
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (int g = 1; g <= n; ++g) {
      Word v = u;
      v.push_back(static_cast<Letter>(g));
      v = rs.reduce(std::move(v));
      if (seen.insert(v).second) {
        if (seen.size() > cap) {
          throw GuardExceeded("element enumeration passed the cap of " + std::to_string(cap) +
                              " for n = " + std::to_string(n));
        }
        queue.push_back(std::move(v));
      }
    }
  }
  std::vector<Element> out;
  out.reserve(seen.size());
  for (const Word& w : seen) {
    out.push_back(Element{w, n});
  }
  return out;
}

TfaeResult tfae_check(const RewriteSystem& rs, Subset x, Subset y) {
  require_complete(rs);
  const int n = rs.alphabet_size();
  require_subset(x, n, "X");
  require_subset(y, n, "Y");
  const Element ex = reduce(rs, idempotent_word(x));
  const Element ey = reduce(rs, idempotent_word(y));
  const Element product = multiply(rs, ex, ey);
  TfaeResult result;
  result.product_idempotent = is_idempotent(rs, product);
  result.product_equals_union = (product.nf == idempotent_word(x | y));
  result.combinatorial = pairwise_exceeds(x, y);
  return result;
}

BraidResult braid_check(const RewriteSystem& rs, Subset x, Subset y) {
  require_complete(rs);
  const int n = rs.alphabet_size();
  require_subset(x, n, "X");
  require_subset(y, n, "Y");
  const Element ex = reduce(rs, idempotent_word(x));
  const Element ey = reduce(rs, idempotent_word(y));
  const Element exy = multiply(rs, ex, ey);
  BraidResult result;
  result.combinatorial = pairwise_exceeds(x, y);
  result.word_identities = is_idempotent(rs, exy) && multiply(rs, exy, ex) == exy &&
                           multiply(rs, ey, exy) == exy;
  return result;
}

Element KiselmanMonoid::generator(int i) const {
  if (i < 1 || i > rank()) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank()));
  }
  return Element{Word{static_cast<Letter>(i)}, rank()};
}

Element KiselmanMonoid::idempotent(Subset x) const {
  require_subset(x, rank(), "X");
  return reduce(idempotent_word(x));
}

}  // namespace kiselman
