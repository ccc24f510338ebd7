#include "crig/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crig/error.hpp"

namespace crig {
namespace {

constexpr int kFixedPointGrid = 1024;
constexpr double kFixedPointConfirm = 1e-9;
constexpr double kFiniteOrderTol = 1e-9;

double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

// Exact sum of two exact values; nullopt unless both are exact.
std::optional<CertifiedInterval> exact_combine(const CertifiedInterval& a, const CertifiedInterval& b, int sign) {
  if (!a.exact || !b.exact) return std::nullopt;
  if (a.rational && b.rational) {
    return CertifiedInterval::of_rational(sign > 0 ? *a.rational + *b.rational : *a.rational - *b.rational);
  }
  return CertifiedInterval::of_real(sign > 0 ? a.lo + b.lo : a.lo - b.lo);
}

std::optional<double> rotation_step(const CircleHomeo& f) {
  if (const auto* r = std::get_if<CircleHomeo::Rotation>(&f.variant())) return r->step;
  return std::nullopt;
}

CertifiedInterval exact_rotation_translation(const CircleHomeo& f, std::int64_t offset) {
  const auto& r = std::get<CircleHomeo::Rotation>(f.variant());
  if (const auto* q = std::get_if<Rational>(&r.angle)) return CertifiedInterval::of_rational(frac(*q) + Rational(offset));
  return CertifiedInterval::of_real(r.step + static_cast<double>(offset));
}

}  // namespace

CertifiedInterval CertifiedInterval::of_rational(const Rational& r) {
  const double v = to_double(r);
  return {v, v, true, r};
}

CertifiedInterval CertifiedInterval::of_real(double v) { return {v, v, true, std::nullopt}; }

CertifiedInterval CertifiedInterval::bounds(double lo, double hi) {
  if (!(lo <= hi)) throw InternalConsistencyError("certified interval with lo > hi");
  return {lo, hi, false, std::nullopt};
}

CertifiedInterval operator+(const CertifiedInterval& a, const CertifiedInterval& b) {
  if (auto e = exact_combine(a, b, +1)) return *e;
  return CertifiedInterval::bounds(down(a.lo + b.lo), up(a.hi + b.hi));
}

CertifiedInterval operator-(const CertifiedInterval& a, const CertifiedInterval& b) {
  if (auto e = exact_combine(a, b, -1)) return *e;
  return CertifiedInterval::bounds(down(a.lo - b.hi), up(a.hi - b.lo));
}

CertifiedInterval operator-(const CertifiedInterval& a) {
  CertifiedInterval out{-a.hi, -a.lo, a.exact, std::nullopt};
  if (a.rational) out.rational = -*a.rational;
  return out;
}

CertifiedInterval operator*(std::int64_t k, const CertifiedInterval& a) {
  if (a.exact) {
    if (a.rational) return CertifiedInterval::of_rational(Rational(k) * *a.rational);
    return CertifiedInterval::of_real(static_cast<double>(k) * a.lo);
  }
  const double x = static_cast<double>(k) * a.lo;
  const double y = static_cast<double>(k) * a.hi;
  return CertifiedInterval::bounds(down(std::min(x, y)), up(std::max(x, y)));
}

bool overlaps(const CertifiedInterval& a, const CertifiedInterval& b, double slack) {
  return a.lo <= b.hi + slack && b.lo <= a.hi + slack;
}

bool overlaps_mod1(const CertifiedInterval& a, const CertifiedInterval& b, double slack) {
  const double k0 = std::floor(a.lo - b.hi - slack);
  for (double k = k0; k <= k0 + 2.0 + std::ceil(a.width()); k += 1.0) {
    if (a.lo <= b.hi + k + slack && b.lo + k <= a.hi + slack) return true;
  }
  return false;
}

CertifiedInterval reduce_mod1(const CertifiedInterval& a) {
  if (a.exact && a.rational) return CertifiedInterval::of_rational(frac(*a.rational));
  if (a.exact) return CertifiedInterval::of_real(normalize_turns(a.lo));
  const double k = std::floor(a.lo);
  return CertifiedInterval::bounds(a.lo - k, a.hi - k);
}

CertifiedInterval translation_number(const LiftedHomeo& F, std::int64_t n) {
  if (n < 1) throw InputError("translation_number: iteration count must be >= 1");
  if (rotation_step(F.base())) return exact_rotation_translation(F.base(), F.offset());
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  double x = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    x = F(x);
    const double kd = static_cast<double>(k);
    lo = std::max(lo, (x - 1.0) / kd);
    hi = std::min(hi, (x + 1.0) / kd);
  }
  if (!std::isfinite(x)) throw IllConditionedError("translation_number: iterate is not finite");
  return CertifiedInterval::bounds(down(lo), up(hi));
}

std::optional<FixedPointWitness> detect_fixed_point(const CircleHomeo& f) {
  if (auto step = rotation_step(f)) {
    if (*step == 0.0) return FixedPointWitness{0.0, 0};
    return std::nullopt;
  }
  if (const auto* m = f.as_moebius()) {
    const MoebiusKind kind = classify_moebius(*m);
    if (kind == MoebiusKind::Elliptic) return std::nullopt;
    const double p = kind == MoebiusKind::Identity ? 0.0 : fixed_points(*m).front().point.turns();
    const double d = f.lift(p) - p;
    const double k = std::round(d);
    if (std::fabs(d - k) > kFixedPointConfirm) return std::nullopt;
    return FixedPointWitness{p, static_cast<std::int64_t>(k)};
  }
  std::vector<double> disp(kFixedPointGrid + 1);
  for (int i = 0; i < kFixedPointGrid; ++i) {
    const double x = static_cast<double>(i) / kFixedPointGrid;
    disp[i] = f.lift(x) - x;
  }
  disp[kFixedPointGrid] = disp[0];
  const auto [mn, mx] = std::minmax_element(disp.begin(), disp.end());
  for (double k = std::floor(*mn); k <= std::ceil(*mx); k += 1.0) {
    for (int i = 0; i < kFixedPointGrid; ++i) {
      const double g0 = disp[i] - k;
      const double g1 = disp[i + 1] - k;
      double lo = static_cast<double>(i) / kFixedPointGrid;
      double hi = static_cast<double>(i + 1) / kFixedPointGrid;
      if (g0 == 0.0) return FixedPointWitness{lo, static_cast<std::int64_t>(k)};
      if (!(g0 * g1 < 0.0)) continue;
      const bool increasing = g0 < 0.0;
      for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = f.lift(mid) - mid - k;
        if ((gm < 0.0) == increasing) lo = mid; else hi = mid;
      }
      const double p = 0.5 * (lo + hi);
      if (std::fabs(f.lift(p) - p - k) <= kFixedPointConfirm) {
        return FixedPointWitness{normalize_turns(p), static_cast<std::int64_t>(k)};
      }
    }
  }
  return std::nullopt;
}

CertifiedInterval certified_translation_number(const LiftedHomeo& F, std::int64_t n) {
  if (rotation_step(F.base())) return exact_rotation_translation(F.base(), F.offset());
  if (auto w = detect_fixed_point(F.base())) return CertifiedInterval::of_integer(w->translation + F.offset());
  return translation_number(F, n);
}

CertifiedInterval rotation_number(const CircleHomeo& f, std::int64_t n) {
  return reduce_mod1(certified_translation_number(canonical_lift(f), n));
}

std::optional<FiniteOrderRotation> exact_rotation_number_finite_order(const CircleHomeo& f, int max_order) {
  if (max_order < 1) throw InputError("exact_rotation_number_finite_order: max_order must be >= 1");
  int order = 0;
  if (const auto* angle = f.as_rotation(); angle && std::holds_alternative<Rational>(*angle)) {
    const Rational step = frac(std::get<Rational>(*angle));
    if (step.denominator() > max_order) return std::nullopt;
    return FiniteOrderRotation{static_cast<int>(step.denominator()), step, step};
  } else if (const auto* m = f.as_moebius()) {
    // Parabolic and hyperbolic maps have infinite order; their powers also overflow.
    const MoebiusKind kind = classify_moebius(*m);
    if (kind == MoebiusKind::Parabolic || kind == MoebiusKind::Hyperbolic) return std::nullopt;
    MoebiusTransform acc;
    for (int q = 1; q <= max_order; ++q) {
      acc = acc * *m;
      if (acc.identity_residual() <= kFiniteOrderTol) {
        order = q;
        break;
      }
    }
  } else {
    std::vector<CirclePoint> pts(64);
    for (int j = 0; j < 64; ++j) pts[j] = CirclePoint(j / 64.0);
    for (int q = 1; q <= max_order && order == 0; ++q) {
      bool back = true;
      for (int j = 0; j < 64; ++j) {
        pts[j] = f(pts[j]);
        back = back && circle_distance(pts[j], CirclePoint(j / 64.0)) <= kFiniteOrderTol;
      }
      if (back) order = q;
    }
  }
  if (order == 0) return std::nullopt;
  double x = 0.0;
  for (int i = 0; i < order; ++i) x = f.lift(x);
  const double p = std::round(x);
  if (std::fabs(x - p) > 1e-6) throw PrecisionError("finite-order map: lifted power is not an integer translation");
  const Rational translation(static_cast<std::int64_t>(p), order);
  return FiniteOrderRotation{order, translation, frac(translation)};
}

CocycleValue translation_cocycle(const CircleHomeo& f, const CircleHomeo& g, std::int64_t n) {
  CertifiedInterval tau;
  if (rotation_step(f) && rotation_step(g)) {
    // Lifts of rotations commute, so translation numbers add.
    tau = CertifiedInterval::of_integer(0);
  } else {
    const LiftedHomeo F = canonical_lift(f);
    const LiftedHomeo G = canonical_lift(g);
    const LiftedHomeo FG = compose(F, G);
    tau = certified_translation_number(FG, n) - certified_translation_number(F, n) - certified_translation_number(G, n);
  }
  if (tau.hi < -1.0 || tau.lo > 1.0) {
    throw InternalConsistencyError("translation cocycle interval misses [-1, 1]");
  }
  return CocycleValue{tau};
}

}  // namespace crig
