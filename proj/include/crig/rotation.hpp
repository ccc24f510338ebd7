#pragma once

#include <cstdint>
#include <optional>

#include "crig/circle.hpp"
#include "crig/rational.hpp"

namespace crig {

inline constexpr std::int64_t kDefaultIterations = 10000;

/// A closed interval [lo, hi] known to contain a real quantity. When `exact`
/// is set, lo == hi is the value itself, and `rational` carries it exactly
/// whenever it is rational.
struct CertifiedInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool exact = false;
  std::optional<Rational> rational;

  static CertifiedInterval of_rational(const Rational& r);
  static CertifiedInterval of_integer(std::int64_t k) { return of_rational(Rational(k)); }
  static CertifiedInterval of_real(double v);
  static CertifiedInterval bounds(double lo, double hi);

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b);
CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b);
CertifiedInterval operator-(const CertifiedInterval& a);
CertifiedInterval operator*(std::int64_t k, const CertifiedInterval& a);

bool overlaps(const CertifiedInterval& a, const CertifiedInterval& b, double slack = 0.0);
/// Whether a and b + k overlap for some integer k.
bool overlaps_mod1(const CertifiedInterval& a, const CertifiedInterval& b, double slack = 0.0);
/// Translates by an integer so that lo lands in [0, 1) (exact values go to [0, 1)).
CertifiedInterval reduce_mod1(const CertifiedInterval& a);

/// Value of the translation cocycle; always meets [-1, 1].
struct CocycleValue {
  CertifiedInterval value;
};

/// Two-sided iteration bound: for every k <= n, |F^k(0) - k rot~(F)| < 1,
/// intersected over k. Width <= 2/n (up to one ulp of outward rounding on
/// each end). Rigid rotations are returned exactly.
CertifiedInterval translation_number(const LiftedHomeo& F, std::int64_t n = kDefaultIterations);

/// A point p (in turns) with F(p) = p + translation for the canonical lift F.
struct FixedPointWitness {
  double point = 0.0;
  std::int64_t translation = 0;
};

/// Moebius maps: analytic fixed points. Other maps: sign change of
/// F(x) - x - k on a 1024-point grid, confirmed by bisection to 1e-9.
std::optional<FixedPointWitness> detect_fixed_point(const CircleHomeo& f);

/// translation_number with the fixed-point shortcut: a detected fixed point
/// makes the answer an exact integer.
CertifiedInterval certified_translation_number(const LiftedHomeo& F, std::int64_t n = kDefaultIterations);

/// Poincare rotation number, reduced mod 1.
CertifiedInterval rotation_number(const CircleHomeo& f, std::int64_t n = kDefaultIterations);

struct FiniteOrderRotation {
  int order = 1;
  Rational translation;  // translation number of the canonical lift
  Rational rotation;     // translation mod 1, in [0, 1)
};

/// Least q <= max_order with f^q = id (matrix +-I within 1e-9 for Moebius
/// maps, 64 grid points within 1e-9 otherwise); nullopt when there is none.
std::optional<FiniteOrderRotation> exact_rotation_number_finite_order(const CircleHomeo& f, int max_order);

/// rot~(F G) - rot~(F) - rot~(G) for the canonical lifts F, G. Throws
/// InternalConsistencyError if the interval misses [-1, 1].
CocycleValue translation_cocycle(const CircleHomeo& f, const CircleHomeo& g, std::int64_t n = kDefaultIterations);

}  // namespace crig
