#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace crig {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p/q" or an integer literal; throws InputError otherwise.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

/// Representative of r modulo 1 in [0, 1).
Rational frac(const Rational& r);

std::int64_t floor(const Rational& r);

std::int64_t lcm(std::int64_t a, std::int64_t b);

}  // namespace crig
