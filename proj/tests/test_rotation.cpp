#include <doctest.h>

#include <cmath>
#include <random>

#include "crig/error.hpp"
#include "crig/fuchsian.hpp"
#include "crig/rotation.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace crig;

TEST_CASE("translation number examples") {
  const auto shift = LiftedHomeo(CircleHomeo::identity(), 3);
  const auto t = translation_number(shift, 10);
  CHECK(t.exact);
  CHECK(*t.rational == Rational(3));

  const auto rot = translation_number(canonical_lift(CircleHomeo::rotation(0.3819660112501051)), 10000);
  CHECK(rot.contains(0.3819660112501051));
  CHECK(rot.width() <= 2e-4);

  const auto hyp = CircleHomeo::moebius(MoebiusTransform::from_entries(2, 0, 0, 0.5));
  const auto raw = translation_number(canonical_lift(hyp), 10000);
  CHECK(raw.contains(0.0));
  const auto cert = certified_translation_number(canonical_lift(hyp));
  CHECK(cert.exact);
  CHECK(*cert.rational == Rational(0));
  CHECK_THROWS_AS(translation_number(shift, 0), InputError);
}

TEST_CASE("rotation number examples") {
  const auto third = rotation_number(CircleHomeo::rotation(Rational(1, 3)));
  CHECK(third.exact);
  CHECK(*third.rational == Rational(1, 3));
  for (const auto& m : {MoebiusTransform::from_entries(2, 0, 0, 0.5), MoebiusTransform::from_entries(1, 1, 0, 1),
                        MoebiusTransform::from_entries(3, 1, 2, 1)}) {
    const auto r = rotation_number(CircleHomeo::moebius(m));
    CHECK(r.exact);
    CHECK(*r.rational == Rational(0));
  }
  // A negative translation still reduces into [0, 1).
  const auto neg = rotation_number(CircleHomeo::rotation(Rational(-1, 4)));
  CHECK(*neg.rational == Rational(3, 4));
}

TEST_CASE("finite order rotation numbers") {
  const auto r = exact_rotation_number_finite_order(CircleHomeo::rotation(Rational(3, 7)), 10);
  REQUIRE(r);
  CHECK(r->order == 7);
  CHECK(r->rotation == Rational(3, 7));
  CHECK_FALSE(exact_rotation_number_finite_order(CircleHomeo::rotation(Rational(3, 17)), 10));
  CHECK_FALSE(exact_rotation_number_finite_order(CircleHomeo::moebius(MoebiusTransform::from_entries(2, 0, 0, 0.5)), 64));
  CHECK_FALSE(exact_rotation_number_finite_order(CircleHomeo::moebius(MoebiusTransform::from_entries(1, 1, 0, 1)), 64));
  CHECK_THROWS_AS(exact_rotation_number_finite_order(CircleHomeo::identity(), 0), InputError);

  // Elliptic disk rotation by 2 pi p/q: order from the matrix-power oracle,
  // rotation number from the winding of one orbit.
  for (auto [p, q] : {std::pair{1, 5}, {2, 5}, {3, 8}, {5, 12}}) {
    const auto m = MoebiusTransform::disk_rotation(2 * std::numbers::pi * p / q);
    const auto fo = exact_rotation_number_finite_order(CircleHomeo::moebius(m), 64);
    REQUIRE(fo);
    CHECK(fo->order == oracle::matrix_order({m.a(), m.b(), m.c(), m.d()}, 64));
    const auto f = [&](oracle::LD t) { return oracle::moebius_turns(m.a(), m.b(), m.c(), m.d(), t); };
    const auto [wp, wq] = oracle::periodic_rotation(f, fo->order);
    CHECK(fo->rotation == Rational(wp, wq));
  }
}

TEST_CASE("order-4 generator of the (0;3,3,4) action") {
  const auto geo = build_orbifold_334();
  const auto m = geo.matrix(2);
  CHECK(oracle::matrix_order({m.a(), m.b(), m.c(), m.d()}, 64) == 4);
  const auto fo = exact_rotation_number_finite_order(geo.images()[2], 64);
  REQUIRE(fo);
  CHECK(fo->order == 4);
  CHECK((fo->rotation == Rational(1, 4) || fo->rotation == Rational(3, 4)));
  const auto f = [&](oracle::LD t) { return oracle::moebius_turns(m.a(), m.b(), m.c(), m.d(), t); };
  const auto [p, q] = oracle::periodic_rotation(f, 4);
  CHECK(fo->rotation == Rational(p, q));
}

TEST_CASE("translation cocycle") {
  const auto a = CircleHomeo::rotation(Rational(2, 7)), b = CircleHomeo::rotation(Rational(3, 7));
  CHECK(*translation_cocycle(a, b).value.rational == Rational(0));

  // Rotation pair (alpha, 1 - alpha) as elliptic matrices; the oracle
  // iterates the composed canonical lifts directly.
  const double alpha = 0.3;
  const auto f = CircleHomeo::moebius(MoebiusTransform::disk_rotation(2 * std::numbers::pi * alpha));
  const auto g = CircleHomeo::moebius(MoebiusTransform::disk_rotation(2 * std::numbers::pi * (1 - alpha)));
  const auto average = [](auto step) {
    oracle::LD x = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) x = step(x);
    return x / n;
  };
  const oracle::LD direct = average([&](oracle::LD x) { return f.lift(g.lift(double(x))); }) -
                            average([&](oracle::LD x) { return f.lift(double(x)); }) -
                            average([&](oracle::LD x) { return g.lift(double(x)); });
  const double nearest = std::round(static_cast<double>(direct));
  CHECK(std::fabs(static_cast<double>(direct) - nearest) < 1e-3);
  CHECK((nearest == 0.0 || nearest == -1.0));
  const auto tau = translation_cocycle(f, g).value;
  CHECK(overlaps(tau, CertifiedInterval::of_real(nearest), 1e-9));

  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto x = test_support::random_moebius(rng), y = test_support::random_moebius(rng);
    const auto v = translation_cocycle(x, y, 10000).value;
    CHECK(v.width() <= 6e-4);
    CHECK(v.lo >= -1.0 - 1e-3);
    CHECK(v.hi <= 1.0 + 1e-3);
  }
}

TEST_CASE("property: widths, inverses, powers, conjugacy") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto f = (i % 3 == 0) ? test_support::random_pl(rng) : test_support::random_moebius(rng);
    const std::int64_t n = 1000 + 97 * i;
    const auto tn = translation_number(canonical_lift(f), n);
    CHECK(tn.width() <= 2.0 / static_cast<double>(n) + 1e-15);

    const auto r = rotation_number(f);
    const auto ri = rotation_number(inverse(f));
    CHECK(overlaps_mod1(ri, -r));

    for (int k = 2; k <= 5; ++k) {
      const auto rk = rotation_number(power(f, k));
      CHECK(overlaps_mod1(rk, k * r, 1e-9));
    }

    // Shifting the lift by an integer shifts the translation number.
    const auto F = canonical_lift(f);
    const auto shifted = certified_translation_number(F.shifted(3), n);
    CHECK(overlaps(shifted, certified_translation_number(F, n) + CertifiedInterval::of_integer(3)));

    const auto h = test_support::random_homeo(rng);
    CHECK(overlaps_mod1(rotation_number(conjugate(h, f)), r, 1e-9));
  }
}

TEST_CASE("fixed point detection") {
  const auto pl = CircleHomeo::piecewise_linear({{0.0, 0.0}, {0.3, 0.5}, {0.6, 0.65}});
  const auto w = detect_fixed_point(pl);
  REQUIRE(w);
  CHECK(std::fabs(pl.lift(w->point) - w->point - static_cast<double>(w->translation)) < 1e-9);
  CHECK_FALSE(detect_fixed_point(CircleHomeo::rotation(0.25)));
  CHECK(detect_fixed_point(CircleHomeo::rotation(0.0)));
}

TEST_CASE("interval arithmetic") {
  const auto a = CertifiedInterval::bounds(0.1, 0.2), b = CertifiedInterval::bounds(0.3, 0.5);
  const auto s = a + b;
  CHECK(s.lo <= 0.4);
  CHECK(s.hi >= 0.7);
  const auto d = a - b;
  CHECK(d.lo <= -0.4);
  CHECK(d.hi >= -0.1);
  CHECK(overlaps_mod1(CertifiedInterval::of_real(0.999), CertifiedInterval::of_real(-0.001), 1e-12));
  CHECK_FALSE(overlaps_mod1(CertifiedInterval::of_real(0.3), CertifiedInterval::of_real(0.5)));
  CHECK_THROWS_AS(CertifiedInterval::bounds(1.0, 0.0), InternalConsistencyError);
  const auto e = CertifiedInterval::of_rational(Rational(1, 3)) + CertifiedInterval::of_rational(Rational(1, 6));
  CHECK(*e.rational == Rational(1, 2));
}
