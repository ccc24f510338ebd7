#include <doctest.h>

#include <algorithm>
#include <random>

#include "crig/denjoy.hpp"
#include "crig/error.hpp"
#include "crig/fuchsian.hpp"
#include "crig/rotation.hpp"
#include "oracles.hpp"

using namespace crig;

namespace {

Representation genus2() { return boundary_action(build_surface_group(2)); }

// One-generator Denjoy setting: a is an irrational rotation, b is trivial.
Representation one_generator(double alpha) {
  return surface_rep(1, {CircleHomeo::rotation(alpha), CircleHomeo::identity()}, "denjoy1");
}

// Orbit of `start` under every reduced word of length <= depth, by depth-first
// recursion on long double matrices, and its largest circular gap.
double oracle_max_gap(const Representation& rep, double start, int depth) {
  std::vector<oracle::M2> mats;
  for (const auto& f : rep.images()) {
    const auto& m = *f.as_moebius();
    const auto mi = m.inverse();
    mats.push_back({m.a(), m.b(), m.c(), m.d()});
    mats.push_back({mi.a(), mi.b(), mi.c(), mi.d()});
  }
  std::vector<oracle::LD> pts;
  auto rec = [&](auto&& self, oracle::LD t, int last, int left) -> void {
    pts.push_back(t);
    if (left == 0) return;
    for (int c = 0; c < static_cast<int>(mats.size()); ++c) {
      if (last >= 0 && c == (last ^ 1)) continue;
      const auto& m = mats[c];
      self(self, oracle::moebius_turns(m.a, m.b, m.c, m.d, t), c, left - 1);
    }
  };
  rec(rec, start, -1, depth);
  std::sort(pts.begin(), pts.end());
  oracle::LD best = pts.front() + 1 - pts.back();
  for (std::size_t i = 1; i < pts.size(); ++i) best = std::max(best, pts[i] - pts[i - 1]);
  return static_cast<double>(best);
}

}  // namespace

TEST_CASE("cyclic order of points") {
  CHECK(cyclic_order(0.1, 0.5, 0.9) == 1);
  CHECK(cyclic_order(0.9, 0.5, 0.1) == -1);
  CHECK(cyclic_order(0.5, 0.9, 0.1) == 1);
  CHECK(cyclic_order(0.3, 0.3, 0.7) == 0);
  CHECK(cyclic_order(0.3, 0.7, 0.3 + 1e-14) == 0);
}

TEST_CASE("symbolic action of the blow-up") {
  const auto rep = genus2();
  const BlownUpAction blown(rep, 0.1234567);
  CHECK(blown.inserted_total() < 2 * 0.3 + 1e-12);
  CHECK(blown.length({}) == doctest::Approx(0.3));
  CHECK_FALSE(blown.census().empty());

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint32_t> gen(0, 3);
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back({gen(rng), gen(rng) % 2 == 1});
    const Letter g{gen(rng), gen(rng) % 2 == 1};
    // Inserted points: collapse commutes with the action exactly.
    const auto p = SymbolicPoint::inserted(w, u(rng));
    const auto gp = blown.act(g, p);
    CHECK(blown.collapse(gp) == blown.position(reduce(concat(Word{g}, w))));
    CHECK(circle_distance(CirclePoint(blown.collapse(gp)), CirclePoint(rep.apply_word(Word{g}, blown.collapse(p)))) < 1e-9);
    // Base points: within 1e-9.
    const auto b = SymbolicPoint::base(u(rng));
    CHECK(circle_distance(CirclePoint(collapse_map(blown, blown.act(g, b))),
                          CirclePoint(rep.apply_word(Word{g}, collapse_map(blown, b)))) < 1e-9);
  }

  // Interval endpoints collapse together; the identity word fixes everything.
  const Word w = rep.parse("a1 B2 a2");
  CHECK(blown.collapse(SymbolicPoint::inserted(w, 0.0)) == blown.collapse(SymbolicPoint::inserted(w, 1.0)));
  const auto p = SymbolicPoint::inserted(w, 0.25);
  const auto q = blown.act(Word{}, p);
  CHECK(blown.same(p, q));
  const auto b = SymbolicPoint::base(0.77);
  CHECK(blown.same(b, blown.act(Word{}, b)));
  CHECK(blown.same(b, blown.act(rep.parse("a1 A1"), b)));
  // w . p0 is stored symbolically and reduced.
  const auto r = blown.act(rep.parse("A1"), SymbolicPoint::inserted(rep.parse("a1 b1"), 0.5));
  CHECK(std::get<SymbolicPoint::Inserted>(r.v).word == rep.parse("b1"));
}

TEST_CASE("blow-up parameters are validated") {
  const auto rep = genus2();
  CHECK_THROWS_AS(BlownUpAction(rep, 0.1, {0.5, 8, 3}), InputError);
  CHECK_THROWS_AS(BlownUpAction(rep, 0.1, {0.0, 8, 3}), InputError);
  // A fixed point of a hyperbolic generator is not free.
  const auto fp = fixed_points(*rep.images()[0].as_moebius());
  CHECK_THROWS_AS(BlownUpAction(rep, fp[0].point.turns(), {0.3, 4, 3}), MarkedPointNotFreeError);
}

TEST_CASE("semi-conjugacy certificates") {
  const auto rep = genus2();
  const BlownUpAction blown(rep, 0.1234567);
  const CircleAction base(rep);
  const auto collapse = [&](const SymbolicPoint& p) { return SymbolicPoint::base(blown.collapse(p)); };
  SemiConjugacyOptions opt;
  opt.samples = 200;
  const auto c = check_semi_conjugacy(blown, base, collapse, SymbolicPoint::inserted({}, 0.5), opt);
  CHECK(c.pass);
  CHECK(c.samples == 200);
  CHECK(c.mismatches == 0);
  CHECK(c.equivariance_failures == 0);
  CHECK(c.triples_checked > 0);

  opt.samples = 60;
  const auto self = check_semi_conjugacy(base, base, [](const SymbolicPoint& p) { return p; },
                                         SymbolicPoint::base(0.3), opt);
  CHECK(self.pass);

  const CircleAction flipped(rep.flipped());
  const auto flip = [](const SymbolicPoint& p) {
    return SymbolicPoint::base(-std::get<SymbolicPoint::Base>(p.v).x);
  };
  const auto bad = check_semi_conjugacy(base, flipped, flip, SymbolicPoint::base(0.3), opt);
  CHECK_FALSE(bad.pass);
  CHECK(bad.mismatches > 0);
  CHECK(bad.equivariance_failures == 0);
  REQUIRE(bad.witness);
}

TEST_CASE("minimality probes") {
  const auto half = surface_rep(1, {CircleHomeo::rotation(Rational(1, 2)), CircleHomeo::identity()});
  for (int depth : {1, 3, 5}) {
    const auto m = minimality_probe(half, 0.1, depth, 0.4);
    CHECK(m.by_depth.back().max_gap == doctest::Approx(0.5));
    CHECK(m.gap_found);
  }

  const auto rep = genus2();
  const auto base = minimality_probe(rep, 0.3734567, 8, 0.05);
  CHECK(base.by_depth.size() == 9);
  CHECK(base.by_depth.back().max_gap < 0.05);
  for (int d = 5; d <= 8; ++d) CHECK(base.by_depth[d].max_gap <= base.by_depth[d - 1].max_gap);
  CHECK(base.by_depth[6].max_gap == doctest::Approx(oracle_max_gap(rep, 0.3734567, 6)).epsilon(1e-9));

  const BlownUpAction blown(rep, 0.1234567);
  const auto b = minimality_probe(blown, 0.3734567, 8, blown.length({}));
  CHECK(b.gap_found);
  REQUIRE(b.witness);
  CHECK(b.witness->empty());
  for (const auto& g : b.by_depth) CHECK(g.max_gap >= blown.length({}));
}

TEST_CASE("one-generator Denjoy example") {
  const double alpha = 0.6180339887498949;
  const auto rep = one_generator(alpha);
  const BlownUpAction blown(rep, 0.05, {0.3, 8, 6});
  // Inserted intervals are permuted by shifting the word.
  const Word a{{0, false}};
  const auto p = SymbolicPoint::inserted(power(a, 3), 0.4);
  const auto q = blown.act(a, p);
  CHECK(std::get<SymbolicPoint::Inserted>(q.v).word == power(a, 4));
  CHECK(blown.length(power(a, 4)) < blown.length(power(a, 3)));
  // The realized blow-up has the rotation number of the rotation it collapses to.
  const auto mesh = realize_mesh(blown, 2048);
  const auto r = rotation_number(mesh.rep.images()[0], 20000);
  CHECK(overlaps_mod1(r, CertifiedInterval::of_real(alpha), 1e-2));
  const CircleAction base(rep);
  SemiConjugacyOptions opt;
  opt.samples = 80;
  const auto c = check_semi_conjugacy(blown, base, [&](const SymbolicPoint& s) { return SymbolicPoint::base(blown.collapse(s)); },
                                      SymbolicPoint::inserted({}, 0.5), opt);
  CHECK(c.pass);
}

TEST_CASE("mesh realization of the genus-2 blow-up") {
  const auto rep = genus2();
  const BlownUpAction blown(rep, 0.1234567);
  const auto mesh = realize_mesh(blown);
  CHECK(mesh.knots > 4 * 4096);
  CHECK_NOTHROW(mesh.rep.validate());
  CHECK(mesh.rep.word_residual(mesh.rep.presentation().relators[0]) < 1e-2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> gen(0, 3);
  for (int i = 0; i < 10; ++i) {
    Word w;
    for (int k = 0; k < 1 + i % 4; ++k) w.push_back({gen(rng), gen(rng) % 2 == 1});
    const auto rb = rotation_number(rep.evaluate_word(w));
    const auto rm = rotation_number(mesh.rep.evaluate_word(w));
    CHECK(overlaps_mod1(rb, rm, 1e-2));
  }
  CHECK_THROWS_AS(realize_mesh(blown, 4), InputError);
}
