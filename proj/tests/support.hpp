#pragma once

// Seeded random objects shared by the test files.

#include <algorithm>
#include <random>
#include <vector>

#include "crig/circle.hpp"
#include "crig/representation.hpp"

namespace test_support {

inline crig::CircleHomeo random_moebius(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    if (a * d - b * c > 0.1) return crig::CircleHomeo::moebius(crig::MoebiusTransform::from_entries(a, b, c, d));
  }
}

inline crig::CircleHomeo random_pl(std::mt19937_64& rng, int knots = 6) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> xs{0.0}, ys;
  for (int i = 1; i < knots; ++i) xs.push_back(u(rng));
  for (int i = 0; i < knots; ++i) ys.push_back(0.999 * u(rng));
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<crig::Breakpoint> br;
  for (int i = 0; i < knots; ++i) br.push_back({xs[i], ys[i]});
  return crig::CircleHomeo::piecewise_linear(br);
}

inline crig::CircleHomeo random_homeo(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) ? random_moebius(rng) : random_pl(rng);
}

inline crig::CircleHomeo random_rotation(std::mt19937_64& rng) {
  return crig::CircleHomeo::rotation(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

}  // namespace test_support
