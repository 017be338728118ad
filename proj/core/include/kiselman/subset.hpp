#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kiselman {

// Subset of {1..n} as a bitmask: index k occupies bit k-1.
class Subset {
 public:
  static constexpr int max_index = 31;

  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint32_t bits) {
    Subset s;
    s.bits_ = bits;
    return s;
  }

  static constexpr Subset single(int index) {
    return from_bits(std::uint32_t{1} << (index - 1));
  }

  static Subset of(std::initializer_list<int> indices) {
    Subset s;
    for (int i : indices) {
      s.bits_ |= std::uint32_t{1} << (i - 1);
    }
    return s;
  }

  // The full set {1..n}.
  static constexpr Subset full(int n) {
    return from_bits(n == 0 ? 0u : (~std::uint32_t{0} >> (32 - n)));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int index) const {
    return index >= 1 && index <= 32 && ((bits_ >> (index - 1)) & 1u) != 0;
  }

  // Smallest / largest member. Only meaningful on non-empty sets.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  constexpr int max() const { return std::bit_width(bits_); }

  // True iff every member lies in {1..n}.
  constexpr bool within(int n) const { return (bits_ & ~full(n).bits_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  constexpr Subset operator|(Subset o) const { return from_bits(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return from_bits(bits_ & o.bits_); }
  // Set difference.
  constexpr Subset minus(Subset o) const { return from_bits(bits_ & ~o.bits_); }

  friend constexpr bool operator==(Subset, Subset) = default;
  // Ordering by bitmask value; the deterministic enumeration order.
  friend constexpr auto operator<=>(Subset, Subset) = default;

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    out += "}";
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

// True iff every index of a\b exceeds every index of b\a (vacuously true
// when either difference is empty).  This single predicate drives the
// idempotency criterion for products e_X e_Y and the monotonicity of
// set sequences.
constexpr bool pairwise_exceeds(Subset a, Subset b) {
  const std::uint32_t above = a.minus(b).bits();
  const std::uint32_t below = b.minus(a).bits();
  if (above == 0 || below == 0) return true;
  // min(above) > max(below), on 1-based indices.
  return std::countr_zero(above) >= static_cast<int>(std::bit_width(below));
}

}  // namespace kiselman
