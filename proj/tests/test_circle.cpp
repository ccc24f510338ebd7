#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crig/circle.hpp"
#include "crig/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace crig;

namespace {

MoebiusTransform mat(double a, double b, double c, double d) { return MoebiusTransform::from_entries(a, b, c, d); }

using test_support::random_moebius;
using test_support::random_pl;

}  // namespace

TEST_CASE("circle points and chart") {
  CHECK(normalize_turns(1.25) == doctest::Approx(0.25));
  CHECK(normalize_turns(-0.25) == doctest::Approx(0.75));
  CHECK(normalize_turns(-1e-20) < 1.0);
  CHECK(circle_distance(CirclePoint(0.95), CirclePoint(0.05)) == doctest::Approx(0.1));
  CHECK(turns_from_real(0.0) == doctest::Approx(0.5));
  for (double x : {-30.0, -1.5, -0.2, 0.0, 0.7, 4.0, 100.0}) {
    CHECK(turns_from_real(x) == doctest::Approx(static_cast<double>(oracle::turns_of_real(x))).epsilon(1e-12));
    CHECK(real_from_turns(turns_from_real(x)) == doctest::Approx(x).epsilon(1e-9));
  }
  // The chart is increasing on the real line.
  CHECK(turns_from_real(-1.0) < turns_from_real(1.0));
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(CircleHomeo::rotation(Rational(1, 4)), CirclePoint(0.5)).turns() == doctest::Approx(0.75));
  CHECK(evaluate(CircleHomeo::moebius(mat(1, 0, 0, 1)), CirclePoint(0.3)).turns() == doctest::Approx(0.3));
  const auto h = CircleHomeo::moebius(mat(2, 0, 0, 0.5));
  CHECK(evaluate(h, CirclePoint(0.0)).turns() == doctest::Approx(0.0));
  CHECK(evaluate(h, CirclePoint(0.5)).turns() == doctest::Approx(0.5));
}

TEST_CASE("moebius evaluation agrees with long double oracle") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_moebius(rng);
    const auto& m = *f.as_moebius();
    const double t = u(rng);
    const double got = f(CirclePoint(t)).turns();
    const double want = static_cast<double>(oracle::moebius_turns(m.a(), m.b(), m.c(), m.d(), t));
    CHECK(circle_distance(CirclePoint(got), CirclePoint(want)) < 1e-9);
  }
}

TEST_CASE("canonical lifts") {
  const auto r = canonical_lift(CircleHomeo::rotation(Rational(1, 3)));
  CHECK(r(0.2) == doctest::Approx(0.2 + 1.0 / 3.0));
  CHECK(r(5.2) == doctest::Approx(5.2 + 1.0 / 3.0));
  const auto id = canonical_lift(CircleHomeo::rotation(Rational(0)));
  CHECK(id(-3.7) == doctest::Approx(-3.7));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_moebius(rng);
    const double f0 = f.lift(0.0);
    CHECK(f0 >= 0.0);
    CHECK(f0 < 1.0);
    for (double x : {-1.3, 0.1, 0.5, 0.99, 2.4}) {
      CHECK(f.lift(x + 1.0) == doctest::Approx(f.lift(x) + 1.0).epsilon(1e-12));
      CHECK(f.lift(x + 0.01) > f.lift(x));
      CHECK(f.lift_inverse(f.lift(x)) == doctest::Approx(x).epsilon(1e-9));
      CHECK(normalize_turns(f.lift(x)) == doctest::Approx(f(CirclePoint(x)).turns()).epsilon(1e-9));
    }
  }
}

TEST_CASE("composition and inverses") {
  const auto q = CircleHomeo::rotation(Rational(1, 4));
  const auto half = compose(q, q);
  REQUIRE(half.as_rotation() != nullptr);
  CHECK(std::get<Rational>(*half.as_rotation()) == Rational(1, 2));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    for (const auto& f : {random_moebius(rng), random_pl(rng)}) {
      const auto e = compose(f, inverse(f));
      for (int j = 0; j < 64; ++j) {
        const CirclePoint p(j / 64.0);
        CHECK(circle_distance(e(p), p) < 1e-10);
      }
    }
  }

  const auto M = mat(2, 1, 1, 1), N = mat(1, 3, 0, 1);
  const auto MN = M * N;
  CHECK(MN.determinant() == doctest::Approx(1.0));
  const oracle::M2 o = oracle::mul({2, 1, 1, 1}, {1, 3, 0, 1});
  CHECK(MN.a() == doctest::Approx(static_cast<double>(o.a)));
  CHECK(MN.b() == doctest::Approx(static_cast<double>(o.b)));
  CHECK(MN.c() == doctest::Approx(static_cast<double>(o.c)));
  CHECK(MN.d() == doctest::Approx(static_cast<double>(o.d)));

  // Mixed families compose pointwise.
  const auto f = random_moebius(rng), g = random_pl(rng);
  const auto fg = compose(f, g);
  for (int j = 0; j < 16; ++j) {
    const CirclePoint p(j / 16.0 + 0.01);
    CHECK(circle_distance(fg(p), f(g(p))) < 1e-12);
  }
}

TEST_CASE("classification and fixed points") {
  CHECK(classify_moebius(mat(2, 0, 0, 0.5)) == MoebiusKind::Hyperbolic);
  const double th = std::numbers::pi / 5;
  CHECK(classify_moebius(mat(std::cos(th), -std::sin(th), std::sin(th), std::cos(th))) == MoebiusKind::Elliptic);
  CHECK(classify_moebius(mat(1, 1, 0, 1)) == MoebiusKind::Parabolic);
  CHECK(classify_moebius(mat(1, 0, 0, 1)) == MoebiusKind::Identity);
  CHECK(classify_moebius(mat(1, 1e-11, 0, 1)) == MoebiusKind::Identity);

  const auto fp = fixed_points(mat(2, 0, 0, 0.5));
  REQUIRE(fp.size() == 2);
  std::vector<double> pts{fp[0].point.turns(), fp[1].point.turns()};
  std::sort(pts.begin(), pts.end());
  CHECK(pts[0] == doctest::Approx(0.0));  // infinity
  CHECK(pts[1] == doctest::Approx(0.5));  // zero
  CHECK(fp[0].stability != fp[1].stability);
  // x -> 4x pushes points toward infinity.
  for (const auto& p : fp) {
    const bool at_infinity = p.point.turns() < 0.25;
    CHECK((p.stability == Stability::Attracting) == at_infinity);
  }
  const auto par = fixed_points(mat(1, 1, 0, 1));
  REQUIRE(par.size() == 1);
  CHECK(par[0].point.turns() == doctest::Approx(0.0));
  CHECK(par[0].stability == Stability::Neutral);
  CHECK_THROWS_AS(fixed_points(mat(std::cos(th), -std::sin(th), std::sin(th), std::cos(th))), NoFixedPointError);
}

TEST_CASE("attracting fixed point matches iteration") {
  std::mt19937_64 rng(5);
  int hyperbolic = 0;
  for (int i = 0; i < 100 && hyperbolic < 20; ++i) {
    const auto f = random_moebius(rng);
    const auto& m = *f.as_moebius();
    if (classify_moebius(m) != MoebiusKind::Hyperbolic || std::fabs(m.trace()) < 2.5) continue;
    ++hyperbolic;
    const auto fp = fixed_points(m);
    const auto attracting = fp[0].stability == Stability::Attracting ? fp[0] : fp[1];
    const auto repelling = fp[0].stability == Stability::Attracting ? fp[1] : fp[0];
    oracle::LD t = repelling.point.turns() + 0.37L;
    for (int k = 0; k < 200; ++k) t = oracle::moebius_turns(m.a(), m.b(), m.c(), m.d(), t);
    CHECK(circle_distance(CirclePoint(static_cast<double>(t)), attracting.point) < 1e-8);
  }
  CHECK(hyperbolic > 5);
}

TEST_CASE("piecewise linear maps") {
  const auto f = CircleHomeo::piecewise_linear({{0.0, 0.1}, {0.5, 0.3}});
  CHECK(f.lift(0.0) == doctest::Approx(0.1));
  CHECK(f.lift(0.25) == doctest::Approx(0.2));
  CHECK(f.lift(0.75) == doctest::Approx(0.3 + 0.25 * 0.8 / 0.5));
  CHECK(f.lift(1.0) == doctest::Approx(1.1));
  CHECK(f.lift_inverse(0.2) == doctest::Approx(0.25));
  CHECK_THROWS_AS(CircleHomeo::piecewise_linear({{0.0, 0.5}, {0.5, 0.2}}), InputError);
  CHECK_THROWS_AS(CircleHomeo::piecewise_linear({{0.0, 0.0}, {0.5, 1.5}}), InputError);
}

TEST_CASE("conjugation and flips") {
  std::mt19937_64 rng(9);
  const auto f = random_moebius(rng), h = random_pl(rng);
  const auto c = conjugate(h, f);
  for (int j = 0; j < 16; ++j) {
    const CirclePoint p(j / 16.0 + 0.003);
    CHECK(circle_distance(c(h(p)), h(f(p))) < 1e-9);
  }
  const auto fl = flip_orientation(f);
  for (int j = 0; j < 16; ++j) {
    const double t = j / 16.0 + 0.003;
    CHECK(circle_distance(fl(CirclePoint(-t)), CirclePoint(-f(CirclePoint(t)).turns())) < 1e-9);
  }
  CHECK(CircleHomeo::identity().is_identity());
  CHECK_FALSE(f.is_identity());
}

TEST_CASE("degenerate matrices are rejected") {
  CHECK_THROWS_AS(mat(1, 2, 2, 1), IllConditionedError);
  CHECK_THROWS_AS(mat(0, 0, 0, 0), IllConditionedError);
  CHECK_THROWS_AS(mat(NAN, 0, 0, 1), IllConditionedError);
}

TEST_CASE("words over different tables do not compose") {
  auto t1 = std::make_shared<const GeneratorTable>("t1", std::vector<std::string>{"a"},
                                                   std::vector<CircleHomeo>{CircleHomeo::rotation(0.1)});
  auto t2 = std::make_shared<const GeneratorTable>("t2", std::vector<std::string>{"a"},
                                                   std::vector<CircleHomeo>{CircleHomeo::rotation(0.2)});
  const auto w1 = CircleHomeo::word(t1, Word{{0, false}});
  const auto w2 = CircleHomeo::word(t2, Word{{0, false}});
  CHECK_THROWS_AS(compose(w1, w2), CompositionDomainError);
  CHECK_THROWS_AS(CircleHomeo::word(t1, Word{{3, false}}), UnknownGeneratorError);
  const auto ww = compose(w1, w1);
  CHECK(ww(CirclePoint(0.0)).turns() == doctest::Approx(0.2));
}

TEST_CASE("batched evaluation matches pointwise") {
  std::mt19937_64 rng(13);
  std::vector<double> in(37), out(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& x : in) x = u(rng);
  for (const auto& f : {random_moebius(rng), random_pl(rng), CircleHomeo::rotation(0.3)}) {
    evaluate_batch(f, in, out);
    for (std::size_t i = 0; i < in.size(); ++i) CHECK(circle_distance(CirclePoint(out[i]), f(CirclePoint(in[i]))) < 1e-12);
  }
}

TEST_CASE("distortion of conjugators") {
  CHECK(distortion(CircleHomeo::rotation(0.3)) == 1.0);
  CHECK(distortion(CircleHomeo::moebius(MoebiusTransform::disk_rotation(1.0))) == doctest::Approx(1.0));
  CHECK(distortion(CircleHomeo::moebius(mat(2, 0, 0, 0.5))) == doctest::Approx(std::pow((4 + 0.25) / 2, 2)));
  // Slopes 0.4 and 1.6.
  CHECK(distortion(CircleHomeo::piecewise_linear({{0.0, 0.0}, {0.5, 0.2}})) == doctest::Approx(4.0));
}
