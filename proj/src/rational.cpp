#include "crig/rational.hpp"

#include <charconv>
#include <numeric>

#include "crig/error.hpp"

namespace crig {
namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto res = std::from_chars(first, s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || first == s.data() + s.size()) {
    throw InputError("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash), text), den);
}

std::int64_t floor(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();  // always positive
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace crig
