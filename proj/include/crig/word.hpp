#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crig {

/// One generator or its inverse.
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Free reduction (cancels adjacent x x^-1 pairs).
Word reduce(Word w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

bool is_freely_trivial(const Word& w);

/// Whitespace-separated tokens; a token whose first character is upper case
/// denotes the inverse of the generator spelled in lower case. An optional
/// "^k" suffix repeats the letter (negative k inverts).
///   "a1 B1 a2^2"  ->  a1 b1^-1 a2 a2
Word parse_word(std::string_view text, std::span<const std::string> generator_names);

std::string format_word(const Word& w, std::span<const std::string> generator_names);

}  // namespace crig
