#include "kiselman/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace kiselman {

void check_rank(int n) {
  if (n < 1) {
    throw std::invalid_argument("rank must be at least 1, got " + std::to_string(n));
  }
  if (n > kMaxRank) {
    throw std::invalid_argument("rank " + std::to_string(n) + " exceeds the supported maximum " +
                                std::to_string(kMaxRank));
  }
}

void check_letters(const Word& w, int n) {
  for (Letter l : w) {
    if (l < 1 || static_cast<int>(l) > n) {
      throw std::invalid_argument("letter " + std::to_string(static_cast<int>(l)) +
                                  " out of range 1.." + std::to_string(n));
    }
  }
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Subset content(const Word& w) {
  std::uint32_t bits = 0;
  for (Letter l : w) {
    bits |= std::uint32_t{1} << (l - 1);
  }
  return Subset::from_bits(bits);
}

Word idempotent_word(Subset x) {
  Word out;
  out.reserve(static_cast<std::size_t>(x.size()));
  auto idx = x.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    out.push_back(static_cast<Letter>(*it));
  }
  return out;
}

std::string word_name(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Letter l : w) {
    out += "a" + std::to_string(static_cast<int>(l));
  }
  return out;
}

std::string word_csv(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ".";
    out += std::to_string(static_cast<int>(w[i]));
  }
  return out;
}

}  // namespace kiselman
