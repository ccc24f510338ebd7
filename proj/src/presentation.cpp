#include "crig/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "crig/error.hpp"

namespace crig {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("bad " + std::string(what) + " '" + std::string(s) + "' in signature");
  }
  return v;
}

}  // namespace

void OrbifoldSignature::validate() const {
  if (genus < 0) throw InputError("signature genus must be >= 0");
  for (int m : periods) {
    if (m < 2) throw InputError("signature periods must be >= 2");
  }
}

std::string to_string(const OrbifoldSignature& sig) {
  std::string out = "(" + std::to_string(sig.genus) + ";";
  for (std::size_t i = 0; i < sig.periods.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sig.periods[i]);
  }
  return out + ")";
}

OrbifoldSignature parse_signature(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw InputError("unbalanced parentheses in signature");
    text = text.substr(1, text.size() - 2);
  }
  const auto semi = text.find(';');
  OrbifoldSignature sig;
  sig.genus = parse_int(semi == std::string_view::npos ? text : text.substr(0, semi), "genus");
  if (semi != std::string_view::npos) {
    std::string_view rest = trim(text.substr(semi + 1));
    if (rest == "-" || rest == "\u2014") rest = {};
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      sig.periods.push_back(parse_int(rest.substr(0, comma), "period"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  sig.validate();
  return sig;
}

std::uint32_t FinitePresentation::index_of(std::string_view name) const {
  const auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) throw UnknownGeneratorError("unknown generator '" + std::string(name) + "'");
  return static_cast<std::uint32_t>(it - generators.begin());
}

std::vector<std::string> orbifold_generator_names(const OrbifoldSignature& sig) {
  std::vector<std::string> names;
  if (sig.genus == 0) {
    for (std::size_t i = 0; i < sig.periods.size(); ++i) {
      if (i < 26) {
        names.emplace_back(1, static_cast<char>('a' + i));
      } else {
        names.push_back("q" + std::to_string(i + 1));
      }
    }
    return names;
  }
  for (int i = 1; i <= sig.genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= sig.periods.size(); ++i) names.push_back("q" + std::to_string(i));
  return names;
}

std::uint32_t cone_generator(const OrbifoldSignature& sig, std::size_t i) {
  return static_cast<std::uint32_t>(2 * sig.genus + i);
}

Word long_relator(const OrbifoldSignature& sig) {
  Word w;
  for (std::size_t i = 0; i < sig.periods.size(); ++i) w.push_back({cone_generator(sig, i), false});
  for (int i = 0; i < sig.genus; ++i) {
    const Word a{{static_cast<std::uint32_t>(2 * i), false}};
    const Word b{{static_cast<std::uint32_t>(2 * i + 1), false}};
    w = concat(w, commutator(a, b));
  }
  return w;
}

FinitePresentation orbifold_presentation(const OrbifoldSignature& sig) {
  sig.validate();
  FinitePresentation pres;
  pres.generators = orbifold_generator_names(sig);
  for (std::size_t i = 0; i < sig.periods.size(); ++i) {
    pres.relators.push_back(power(Word{{cone_generator(sig, i), false}}, sig.periods[i]));
  }
  const Word rel = long_relator(sig);
  pres.relators.push_back(rel);
  if (!sig.periods.empty()) {
    // q_r = (q_1 ... q_{r-1})^-1 (commutator product)^-1, read off the long relator.
    const std::uint32_t last = cone_generator(sig, sig.periods.size() - 1);
    Word prefix(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(sig.periods.size() - 1));
    Word suffix(rel.begin() + static_cast<std::ptrdiff_t>(sig.periods.size()), rel.end());
    pres.derived = DerivedGenerator{last, concat(inverse(prefix), inverse(suffix))};
  }
  return pres;
}

Rational orbifold_euler_characteristic(const OrbifoldSignature& sig) {
  sig.validate();
  Rational s(2 * static_cast<std::int64_t>(sig.genus) - 2);
  for (int m : sig.periods) s += Rational(1) - Rational(1, m);
  return -s;
}

}  // namespace crig
