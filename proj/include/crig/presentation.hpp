#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crig/rational.hpp"
#include "crig/word.hpp"

namespace crig {

/// (g; m_1, ..., m_r) with g >= 0 and every m_i >= 2.
struct OrbifoldSignature {
  int genus = 0;
  std::vector<int> periods;

  /// Throws InputError on a negative genus or a period below 2.
  void validate() const;
  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

/// "(0;3,3,4)"; "(2;)" for a closed surface.
std::string to_string(const OrbifoldSignature& sig);
/// Accepts "(g;m1,...)" with optional parentheses and whitespace.
OrbifoldSignature parse_signature(std::string_view text);

/// A generator that is a word in the others; kept in the generating set so
/// that homomorphisms and representations can name it.
struct DerivedGenerator {
  std::uint32_t generator = 0;
  Word definition;
};

struct FinitePresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::optional<DerivedGenerator> derived;

  std::uint32_t index_of(std::string_view name) const;  // throws UnknownGeneratorError
  Word parse(std::string_view text) const { return parse_word(text, generators); }
  std::string format(const Word& w) const { return format_word(w, generators); }
};

/// Generator names: genus 0 uses a, b, c, ... for the cone generators;
/// otherwise a1, b1, ..., ag, bg, q1, ..., qr.
std::vector<std::string> orbifold_generator_names(const OrbifoldSignature& sig);

/// q_1 ... q_r [a_1,b_1] ... [a_g,b_g] as a word in the standard generators.
Word long_relator(const OrbifoldSignature& sig);

/// Relators q_i^{m_i} in order, then the long relator. The last cone
/// generator (if any) is recorded as derived from the long relator.
FinitePresentation orbifold_presentation(const OrbifoldSignature& sig);

/// Index of q_i among the standard generators.
std::uint32_t cone_generator(const OrbifoldSignature& sig, std::size_t i);

/// chi = -(2g - 2 + sum(1 - 1/m_i)).
Rational orbifold_euler_characteristic(const OrbifoldSignature& sig);

}  // namespace crig
