#include "crig/word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "crig/error.hpp"

namespace crig {

Word reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return reduce(std::move(out));
}

Word power(const Word& w, int k) {
  if (k < 0) return power(inverse(w), -k);
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return reduce(std::move(out));
}

Word commutator(const Word& a, const Word& b) { return concat(concat(a, b), concat(inverse(a), inverse(b))); }

bool is_freely_trivial(const Word& w) { return reduce(w).empty(); }

Word parse_word(std::string_view text, std::span<const std::string> names) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int exponent = 1;
    if (const auto caret = token.find('^'); caret != std::string::npos) {
      const std::string_view e = std::string_view(token).substr(caret + 1);
      const auto res = std::from_chars(e.data(), e.data() + e.size(), exponent);
      if (res.ec != std::errc() || res.ptr != e.data() + e.size()) {
        throw InputError("bad exponent in word token '" + token + "'");
      }
      token.resize(caret);
    }
    if (token.empty()) throw InputError("empty generator in word '" + std::string(text) + "'");
    bool inv = false;
    if (std::isupper(static_cast<unsigned char>(token[0]))) {
      inv = true;
      token[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
    }
    std::size_t index = names.size();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == token) index = i;
    }
    if (index == names.size()) throw UnknownGeneratorError("unknown generator '" + token + "'");
    if (exponent < 0) inv = !inv, exponent = -exponent;
    for (int i = 0; i < exponent; ++i) out.push_back(Letter{static_cast<std::uint32_t>(index), inv});
  }
  return out;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    std::string name = l.generator < names.size() ? names[l.generator] : "?" + std::to_string(l.generator);
    if (l.inverse && !name.empty()) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    out += name;
  }
  return out;
}

}  // namespace crig
