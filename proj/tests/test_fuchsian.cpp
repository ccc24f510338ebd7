#include <doctest.h>

#include <cmath>

#include "crig/error.hpp"
#include "crig/fuchsian.hpp"
#include "crig/rotation.hpp"
#include "oracles.hpp"

using namespace crig;

namespace {

oracle::M2 m2(const MoebiusTransform& m) { return {m.a(), m.b(), m.c(), m.d()}; }

}  // namespace

TEST_CASE("hyperbolic points") {
  const auto p = HyperbolicPoint::upper(0.0, 1.0);
  CHECK(std::abs(p.to_disk().coordinate()) < 1e-15);
  const auto q = HyperbolicPoint::disk({0.3, -0.4}).to_upper();
  CHECK(q.coordinate().imag() > 0.0);
  CHECK(std::abs(q.to_disk().coordinate() - std::complex<double>(0.3, -0.4)) < 1e-14);
  CHECK_THROWS_AS(HyperbolicPoint::upper(0.0, -1.0), InputError);
  CHECK_THROWS_AS(HyperbolicPoint::disk({1.0, 0.0}), InputError);
  const auto rot = MoebiusTransform::disk_rotation(std::numbers::pi / 2);
  CHECK(std::abs(apply_disk(rot, {0.5, 0.0}) - std::complex<double>(0.0, 0.5)) < 1e-14);
}

TEST_CASE("surface groups") {
  for (int g = 2; g <= 4; ++g) {
    const auto geo = build_surface_group(g);
    CHECK(geo.kind == "surface");
    CHECK(geo.images().size() == static_cast<std::size_t>(2 * g));
    CHECK(geo.vertices.size() == static_cast<std::size_t>(4 * g));
    CHECK(geo.relator_residual < 1e-9);
    CHECK(geo.witness_residual < 1e-9);
    for (std::size_t i = 0; i < geo.images().size(); ++i) {
      CHECK(std::fabs(geo.matrix(i).trace()) > 2.0);
      CHECK(classify_moebius(geo.matrix(i)) == MoebiusKind::Hyperbolic);
      const auto r = rotation_number(geo.images()[i]);
      CHECK(r.exact);
      CHECK(*r.rational == Rational(0));
    }
    // Relator in long double, independent of the library's word evaluation.
    oracle::M2 acc;
    for (int i = 0; i < g; ++i) {
      const auto a = geo.matrix(2 * i), b = geo.matrix(2 * i + 1);
      const auto ai = a.inverse(), bi = b.inverse();
      acc = oracle::mul(oracle::mul(oracle::mul(oracle::mul(acc, m2(a)), m2(b)), m2(ai)), m2(bi));
    }
    CHECK(oracle::distance_to_pm_identity(acc) < 1e-9);
    // Vertices lie on a circle about the origin.
    for (const auto& v : geo.vertices) CHECK(std::abs(v) == doctest::Approx(std::abs(geo.vertices[0])));
  }
  CHECK_THROWS(build_surface_group(1));
}

TEST_CASE("(0;2,2,2,2g) orbifolds") {
  for (int g = 2; g <= 4; ++g) {
    const auto geo = build_orbifold_2222g(g);
    CHECK(geo.images().size() == 4);
    CHECK(geo.relator_residual < 1e-9);
    const int orders[] = {2, 2, 2, 2 * g};
    for (int i = 0; i < 4; ++i) CHECK(oracle::matrix_order(m2(geo.matrix(i)), 64) == orders[i]);
    const auto d = m2(geo.matrix(3));
    CHECK(oracle::distance_to_pm_identity(oracle::mul(d, d)) > 1e-3);
    const auto fo = exact_rotation_number_finite_order(geo.images()[3], 64);
    REQUIRE(fo);
    CHECK(fo->order == 2 * g);
    CHECK((fo->rotation == Rational(1, 2 * g) || fo->rotation == Rational(2 * g - 1, 2 * g)));
    CHECK(fo->rotation != Rational(0));
    CHECK(fo->rotation != Rational(1, 2));
  }
}

TEST_CASE("(0;3,3,4) orbifold") {
  const auto geo = build_orbifold_334();
  CHECK(geo.images().size() == 3);
  CHECK(geo.relator_residual < 1e-9);
  CHECK(oracle::matrix_order(m2(geo.matrix(0)), 64) == 3);
  CHECK(oracle::matrix_order(m2(geo.matrix(1)), 64) == 3);
  CHECK(oracle::matrix_order(m2(geo.matrix(2)), 64) == 4);
  const auto abc = oracle::mul(oracle::mul(m2(geo.matrix(0)), m2(geo.matrix(1))), m2(geo.matrix(2)));
  CHECK(oracle::distance_to_pm_identity(abc) < 1e-9);
}

TEST_CASE("boundary actions") {
  const auto geo = build_orbifold_2222g(2);
  const auto rep = boundary_action(geo);
  CHECK_NOTHROW(rep.validate());
  CHECK(rep.all_moebius());
  CHECK(rep.evaluate_word("").is_identity());
  CHECK(rep.evaluate_word("a A").is_identity());
  CHECK(rep.word_residual(rep.parse("a b c d")) < 1e-9);
  // d has order 4 on the circle: iterate and compare on sample points.
  const auto& d = rep.images()[3];
  for (int j = 0; j < 16; ++j) {
    CirclePoint p(j / 16.0 + 0.01), q = p;
    for (int k = 0; k < 4; ++k) q = d(q);
    CHECK(circle_distance(p, q) < 1e-9);
    CHECK(circle_distance(p, d(d(p))) > 1e-3);
  }
}

TEST_CASE("torsion-free kernels") {
  for (int g = 2; g <= 3; ++g) {
    const auto geo = build_orbifold_2222g(g);
    const auto hom = hom_2222g(g);
    SchreierResult rs;
    const auto mats = kernel_matrices(geo, hom, &rs);
    CHECK(rs.index == static_cast<std::size_t>(4 * g));
    CHECK(mats.size() == rs.generators.size());
    for (const auto& m : mats) CHECK(std::fabs(m.trace()) >= 2.0 - 1e-9);
    const auto scan = scan_kernel_words(geo, hom, 500, 12, 7);
    CHECK(scan.kernel_words == 500);
    CHECK(scan.pass);
    CHECK(scan.min_abs_trace >= 2.0 - 1e-9);
  }
  const auto geo = build_orbifold_334();
  SchreierResult rs;
  const auto mats = kernel_matrices(geo, hom_334(), &rs);
  CHECK(rs.index == 24);
  for (const auto& m : mats) CHECK(std::fabs(m.trace()) >= 2.0 - 1e-9);
  const auto a = scan_kernel_words(geo, hom_334(), 300, 12, 11);
  const auto b = scan_kernel_words(geo, hom_334(), 300, 12, 11);
  CHECK(a.pass);
  CHECK(a.sampled == b.sampled);
  CHECK(a.min_abs_trace == b.min_abs_trace);
}

TEST_CASE("a mismatched hom exposes elliptic kernel elements") {
  // The trivial hom has the whole group as kernel, including elliptic a.
  const auto geo = build_orbifold_334();
  const auto pres = orbifold_presentation(parse_signature("(0;3,3,4)"));
  const auto trivial = make_hom(pres, FiniteGroup::cyclic(1), {{"a", "1"}, {"b", "1"}});
  CHECK_THROWS_AS(kernel_matrices(geo, trivial), CertificationError);
  CHECK_FALSE(scan_kernel_words(geo, trivial, 50, 4, 1).pass);
}
