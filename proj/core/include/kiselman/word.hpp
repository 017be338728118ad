#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kiselman/subset.hpp"

namespace kiselman {

// Generator index, 1-based: letter k stands for the generator a_k.
using Letter = std::uint8_t;

// A word over the generators; the empty word is the unit.
using Word = std::vector<Letter>;

// Largest supported alphabet size (bounded by the Subset bitmask width).
inline constexpr int kMaxRank = Subset::max_index;

// Throws std::invalid_argument unless 1 <= n <= kMaxRank.
void check_rank(int n);

// Throws std::invalid_argument unless every letter of w lies in 1..n.
void check_letters(const Word& w, int n);

// Length-first, then lexicographic on letter values.
bool shortlex_less(const Word& a, const Word& b);

Word concat(const Word& a, const Word& b);

// The set of generator indices occurring in w.
Subset content(const Word& w);

// The strictly descending word on X; empty when X is empty.
Word idempotent_word(Subset x);

// Display form: "a3a1", with "e" for the empty word.
std::string word_name(const Word& w);

// CSV form: dot-separated indices, "3.1"; empty string for the unit.
std::string word_csv(const Word& w);

}  // namespace kiselman
