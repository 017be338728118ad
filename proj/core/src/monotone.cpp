#include "kiselman/monotone.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "kiselman/errors.hpp"
#include "kiselman/word.hpp"

namespace kiselman {

std::string SetSequence::to_string() const {
  std::string out = "(";
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += ",";
    out += at(i).to_string();
  }
  out += ")";
  return out;
}

SetSequence make_sequence(std::initializer_list<Subset> parts) {
  SetSequence s;
  s.n = static_cast<int>(parts.size());
  s.parts.assign(parts.begin(), parts.end());
  return s;
}

namespace {

void require_shape(const SetSequence& s, const char* who) {
  check_rank(s.n);
  if (static_cast<int>(s.parts.size()) != s.n) {
    throw std::invalid_argument(std::string(who) + ": sequence with " +
                                std::to_string(s.parts.size()) + " parts but n = " +
                                std::to_string(s.n));
  }
  for (Subset p : s.parts) {
    if (!p.within(s.n)) {
      throw std::invalid_argument(std::string(who) + ": part " + p.to_string() +
                                  " is not a subset of {1.." + std::to_string(s.n) + "}");
    }
  }
}

}  // namespace

bool is_monotone(const SetSequence& s) {
  require_shape(s, "is_monotone");
  for (int i = 1; i <= s.n; ++i) {
    for (int j = i + 1; j <= s.n; ++j) {
      if (!pairwise_exceeds(s.at(j), s.at(i))) return false;
    }
  }
  return true;
}

SetSequence star(const SetSequence& x, const SetSequence& y) {
  if (x.n != y.n) {
    throw std::invalid_argument("star: operands of rank " + std::to_string(x.n) + " and " +
                                std::to_string(y.n));
  }
  if (!is_monotone(x) || !is_monotone(y)) {
    throw std::invalid_argument("star: operands must be monotone members of M_n");
  }
  SetSequence z;
  z.n = x.n;
  z.parts.resize(static_cast<std::size_t>(z.n));
  for (int i = 1; i <= z.n; ++i) {
    Subset acc;
    for (int j : y.at(i).indices()) {
      acc = acc | x.at(j);
    }
    z.parts[static_cast<std::size_t>(i - 1)] = acc;
  }
  assert(is_monotone(z));
  return z;
}

SetSequence unit_sequence(int n) {
  check_rank(n);
  SetSequence s;
  s.n = n;
  s.parts.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    s.parts.push_back(Subset::single(i));
  }
  return s;
}

namespace {

// Depth-first over parts in ascending bitmask order; monotonicity is a
// pairwise condition, so a violated prefix can be pruned outright.
void extend(SetSequence& partial, int n, std::uint32_t limit,
            std::vector<SetSequence>& out) {
  if (static_cast<int>(partial.parts.size()) == n) {
    out.push_back(partial);
    return;
  }
  const int j = static_cast<int>(partial.parts.size()) + 1;
  for (std::uint32_t bits = 0; bits <= limit; ++bits) {
    const Subset candidate = Subset::from_bits(bits);
    bool fits = true;
    for (int i = 1; i < j; ++i) {
      if (!pairwise_exceeds(candidate, partial.at(i))) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    partial.parts.push_back(candidate);
    extend(partial, n, limit, out);
    partial.parts.pop_back();
  }
}

}  // namespace

std::vector<SetSequence> enumerate_monotone(int n, int guard) {
  check_rank(n);
  if (n > guard) {
    throw GuardExceeded("enumerate_monotone: n = " + std::to_string(n) +
                        " exceeds the guard of " + std::to_string(guard) +
                        " ((2^n)^n candidates)");
  }
  std::vector<SetSequence> out;
  SetSequence partial;
  partial.n = n;
  extend(partial, n, Subset::full(n).bits(), out);
  return out;
}

}  // namespace kiselman
