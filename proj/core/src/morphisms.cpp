#include "kiselman/morphisms.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "kiselman/errors.hpp"

namespace kiselman {

namespace {

void require_rank_match(int a, int b, const char* who) {
  if (a != b) {
    throw std::invalid_argument(std::string(who) + ": rank mismatch " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

Endomorphism identity_endomorphism(int n) {
  check_rank(n);
  Endomorphism f;
  f.n = n;
  f.images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    f.images.push_back(Subset::single(i));
  }
  return f;
}

SetSequence phi(const Endomorphism& f) {
  SetSequence s;
  s.n = f.n;
  s.parts = f.images;
  return s;
}

Endomorphism endo_from_sequence(const SetSequence& s) {
  if (!is_monotone(s)) {
    throw std::invalid_argument("endo_from_sequence: " + s.to_string() +
                                " is not monotone; no such endomorphism exists");
  }
  Endomorphism f;
  f.n = s.n;
  f.images = s.parts;
  return f;
}

Element apply(const KiselmanMonoid& monoid, const Endomorphism& f, const Word& w) {
  require_rank_match(monoid.rank(), f.n, "apply");
  check_letters(w, f.n);
  Word substituted;
  for (Letter l : w) {
    const Word part = idempotent_word(f.image_of(l));
    substituted.insert(substituted.end(), part.begin(), part.end());
  }
  return monoid.reduce(substituted);
}

bool is_endomorphism(const KiselmanMonoid& monoid, const CandidateMap& candidate) {
  const int n = candidate.n;
  require_rank_match(monoid.rank(), n, "is_endomorphism");
  if (static_cast<int>(candidate.images.size()) != n) {
    throw std::invalid_argument("is_endomorphism: image tuple size mismatch");
  }
  std::vector<Element> b;
  b.reserve(static_cast<std::size_t>(n));
  for (Subset x : candidate.images) {
    b.push_back(monoid.idempotent(x));
  }
  for (int i = 0; i < n; ++i) {
    if (monoid.multiply(b[i], b[i]) != b[i]) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Element ji = monoid.multiply(b[j], b[i]);
      // a_i a_j a_i = a_j a_i and a_j a_i a_j = a_j a_i under the candidate.
      if (monoid.multiply(b[i], monoid.multiply(b[j], b[i])) != ji) return false;
      if (monoid.multiply(ji, b[j]) != ji) return false;
    }
  }
  return true;
}

Endomorphism compose(const Endomorphism& g, const Endomorphism& f) {
  require_rank_match(g.n, f.n, "compose");
  Endomorphism out;
  out.n = g.n;
  out.images.reserve(static_cast<std::size_t>(out.n));
  for (int i = 1; i <= out.n; ++i) {
    Subset acc;
    for (int j : f.image_of(i).indices()) {
      acc = acc | g.image_of(j);
    }
    out.images.push_back(acc);
  }
  assert(is_monotone(phi(out)));
  return out;
}

std::vector<Endomorphism> brute_force_endomorphisms(const KiselmanMonoid& monoid, int guard) {
  const int n = monoid.rank();
  if (n > guard) {
    throw GuardExceeded("brute_force_endomorphisms: n = " + std::to_string(n) +
                        " exceeds the guard of " + std::to_string(guard) +
                        " ((2^n)^n candidate maps)");
  }
  const std::uint64_t part_count = std::uint64_t{1} << n;
  std::vector<Endomorphism> out;
  CandidateMap candidate;
  candidate.n = n;
  candidate.images.assign(static_cast<std::size_t>(n), Subset{});
  // Odometer over image tuples, images[0] most significant.
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= part_count;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int i = n - 1; i >= 0; --i) {
      candidate.images[static_cast<std::size_t>(i)] =
          Subset::from_bits(static_cast<std::uint32_t>(rest % part_count));
      rest /= part_count;
    }
    if (is_endomorphism(monoid, candidate)) {
      Endomorphism f;
      f.n = n;
      f.images = candidate.images;
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<Endomorphism> endomorphisms_from_monotone(int n, int guard) {
  std::vector<Endomorphism> out;
  for (const SetSequence& s : enumerate_monotone(n, guard)) {
    out.push_back(endo_from_sequence(s));
  }
  return out;
}

BoolMatrix psi(const SetSequence& s) {
  if (!is_monotone(s)) {
    throw std::invalid_argument("psi: " + s.to_string() + " is not monotone");
  }
  BoolMatrix m(s.n, s.n);
  for (int i = 1; i <= s.n; ++i) {
    for (int x : s.at(i).indices()) {
      m.set(x, i, true);
    }
  }
  return m;
}

SetSequence psi_inv(const BoolMatrix& m) {
  if (!in_dn(m)) {
    throw std::invalid_argument("psi_inv: matrix " + m.to_string() + " is not a member of D_n");
  }
  SetSequence s;
  s.n = m.rows();
  s.parts.reserve(static_cast<std::size_t>(s.n));
  for (int i = 1; i <= s.n; ++i) {
    s.parts.push_back(Subset::from_bits(m.column_bits(i)));
  }
  assert(is_monotone(s));
  return s;
}

}  // namespace kiselman
