// Acceptance criteria AC1..AC10; prints one PASS/FAIL line each and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "crig/denjoy.hpp"
#include "crig/error.hpp"
#include "crig/euler.hpp"
#include "crig/fuchsian.hpp"
#include "crig/rotation.hpp"
#include "support.hpp"

using namespace crig;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Representation random_conjugate(const Representation& rep, std::mt19937_64& rng, int i) {
  return rep.conjugated(test_support::random_homeo(rng), "conj" + std::to_string(i));
}

void ac1(Outcome& o) {
  for (int g = 2; g <= 4; ++g) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto e = euler_relator(build_surface_group(g).rep);
    const double dt = seconds_since(t0);
    o.require(e.isolated && abs(*e.isolated) == Rational(2 * g - 2), "genus " + std::to_string(g) + " |eu| != 2g-2");
    o.require(e.iterations <= 100000, "genus " + std::to_string(g) + " needed more than 1e5 iterations");
    o.require(dt < 60.0, "genus " + std::to_string(g) + " took over 60 s");
    if (e.isolated) o.detail << "g=" << g << " eu=" << to_string(*e.isolated) << " (" << dt << " s) ";
  }
}

void ac2(Outcome& o) {
  std::mt19937_64 rng(2024);
  int agreed = 0;
  auto compare = [&](const Representation& rep, int g, const std::string& label) {
    const auto both = euler_both(rep, canonical_pants(g));
    const bool ok = both.relator.isolated && both.pants.isolated && *both.relator.isolated == *both.pants.isolated;
    o.require(ok, label + " methods disagree");
    agreed += ok;
  };
  const GeometricRep standard[] = {build_surface_group(2), build_surface_group(3)};
  compare(standard[0].rep, 2, "standard genus 2");
  compare(standard[1].rep, 3, "standard genus 3");
  for (int i = 0; i < 25; ++i) {
    const int g = 2 + i % 2;
    compare(random_conjugate(standard[g - 2].rep, rng, i), g, "conjugate " + std::to_string(i));
  }
  o.detail << agreed << " exact agreements (2 standard, 25 random conjugates)";
}

void ac3(Outcome& o) {
  std::mt19937_64 rng(3);
  int abelian_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const int g = 2 + i % 2;
    std::vector<CircleHomeo> images;
    for (int k = 0; k < 2 * g; ++k) images.push_back(test_support::random_rotation(rng));
    const auto rep = surface_rep(g, images, "abelian");
    const auto e = euler_both(rep, canonical_pants(g));
    const bool ok = *e.relator.isolated == Rational(0) && check_milnor_wood(*e.relator.isolated, g).pass;
    o.require(ok, "abelian rep " + std::to_string(i));
    abelian_ok += ok;
  }
  int tau_ok = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = test_support::random_moebius(rng), g = test_support::random_moebius(rng);
    const auto tau = translation_cocycle(f, g).value;
    const bool ok = tau.hi >= -1.0 - 1e-3 && tau.lo <= 1.0 + 1e-3;
    worst = std::max({worst, std::fabs(tau.lo), std::fabs(tau.hi)});
    o.require(ok, "cocycle pair " + std::to_string(i));
    tau_ok += ok;
  }
  o.detail << abelian_ok << "/100 abelian reps eu=0, " << tau_ok << "/1000 cocycles meet [-1,1], max |tau| " << worst;
}

void ac4(Outcome& o) {
  for (int g = 2; g <= 10; ++g) {
    const auto chi = orbifold_euler_characteristic({0, {2, 2, 2, 2 * g}});
    o.require(chi == Rational(1 - g, 2 * g), "chi(0;2,2,2," + std::to_string(2 * g) + ") = " + to_string(chi));
  }
  const auto chi = orbifold_euler_characteristic({0, {3, 3, 4}});
  o.require(chi == Rational(-1, 12), "chi(0;3,3,4) = " + to_string(chi));
  o.detail << "chi(0;2,2,2,2g) g=2..10 and chi(0;3,3,4) = " << to_string(chi);
}

void ac5(Outcome& o) {
  auto certify = [&](const FiniteGroupHom& hom, const OrbifoldSignature& sig, int genus, std::size_t index) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string label = to_string(sig);
    o.require(check_hom(hom).pass, label + " relators");
    o.require(check_surjective(hom).pass, label + " surjectivity");
    o.require(torsion_orders_certificate(hom, sig).pass, label + " torsion orders");
    const int kg = kernel_genus(sig, static_cast<std::int64_t>(hom.target->order()));
    o.require(kg == genus, label + " kernel genus " + std::to_string(kg));
    const auto rs = reidemeister_schreier(hom.source, hom);
    o.require(rs.index == index, label + " index " + std::to_string(rs.index));
    const double dt = seconds_since(t0);
    o.require(dt < 5.0, label + " took over 5 s");
    o.detail << label << " genus " << kg << " index " << rs.index << "; ";
  };
  for (int g = 2; g <= 4; ++g) certify(hom_2222g(g), {0, {2, 2, 2, 2 * g}}, g, static_cast<std::size_t>(4 * g));
  certify(hom_334(), {0, {3, 3, 4}}, 2, 24);
}

void ac6(Outcome& o) {
  for (int g = 2; g <= 3; ++g) {
    const auto e = euler_orbifold(build_orbifold_2222g(g).rep);
    o.require(e.isolated && abs(*e.isolated) * Rational(4 * g) == Rational(2 * g - 2),
              "(0;2,2,2," + std::to_string(2 * g) + ") multiplicativity");
    if (e.isolated) o.detail << "g=" << g << " eu=" << to_string(*e.isolated) << "; ";
  }
  const auto e = euler_orbifold(build_orbifold_334().rep);
  o.require(e.isolated && abs(*e.isolated) * Rational(24) == Rational(2), "(0;3,3,4) multiplicativity");
  if (e.isolated) {
    const auto tq = split_thirds_quarters(*e.isolated);
    o.require(tq.m % 4 != 0, "(0;3,3,4) quarter part is zero");
    o.detail << "(0;3,3,4) eu=" << to_string(*e.isolated) << " = " << tq.k << "/3 + " << tq.m << "/4";
  }
}

void ac7(Outcome& o) {
  for (int g = 2; g <= 3; ++g) {
    const auto fo = exact_rotation_number_finite_order(build_orbifold_2222g(g).images()[3], 64);
    const bool ok = fo && fo->rotation.denominator() == 2 * g && fo->rotation != Rational(0) &&
                    fo->rotation != Rational(1, 2);
    o.require(ok, "rot(d) for g=" + std::to_string(g));
    if (fo) o.detail << "g=" << g << " rot(d)=" << to_string(fo->rotation) << "; ";
  }
  const auto c = exact_rotation_number_finite_order(build_orbifold_334().images()[2], 64);
  o.require(c && (c->rotation == Rational(1, 4) || c->rotation == Rational(3, 4)), "rot(c) for (0;3,3,4)");
  if (c) o.detail << "(0;3,3,4) rot(c)=" << to_string(c->rotation);
}

void ac8(Outcome& o) {
  auto scan = [&](const GeometricRep& geo, const FiniteGroupHom& hom, const std::string& label) {
    SchreierResult rs;
    double min_trace = 1e300;
    try {
      for (const auto& m : kernel_matrices(geo, hom, &rs)) min_trace = std::min(min_trace, std::fabs(m.trace()));
    } catch (const CertificationError& e) {
      o.require(false, label + ": " + e.what());
    }
    const auto words = scan_kernel_words(geo, hom, 10000, 12, 8);
    o.require(words.pass && words.kernel_words == 10000, label + " kernel word scan");
    o.detail << label << ": " << rs.generators.size() << " Schreier matrices min |tr| " << min_trace << ", "
             << words.kernel_words << " kernel words min |tr| " << words.min_abs_trace << "; ";
  };
  for (int g = 2; g <= 3; ++g) scan(build_orbifold_2222g(g), hom_2222g(g), "(0;2,2,2," + std::to_string(2 * g) + ")");
  scan(build_orbifold_334(), hom_334(), "(0;3,3,4)");
}

void ac9(Outcome& o) {
  const auto rep = boundary_action(build_surface_group(2));
  const double p0 = 0.1234567;
  const BlownUpAction blown(rep, p0);
  const CircleAction base(rep);
  SemiConjugacyOptions opt;
  opt.samples = 200;
  const auto semi = check_semi_conjugacy(
      blown, base, [&](const SymbolicPoint& p) { return SymbolicPoint::base(collapse_map(blown, p)); },
      SymbolicPoint::inserted({}, 0.5), opt);
  o.require(semi.pass && semi.mismatches == 0, "semi-conjugacy via collapse");
  o.detail << "semi-conjugacy N=" << semi.samples << " triples " << semi.triples_checked << " mismatches "
           << semi.mismatches << "; ";

  const double threshold = blown.length({});
  const auto mb = minimality_probe(blown, p0 + 0.25, 8, threshold);
  o.require(mb.gap_found && mb.witness && mb.witness->empty(), "blown-up gap with identity witness");
  bool persistent = true;
  for (const auto& g : mb.by_depth) persistent = persistent && g.max_gap >= threshold;
  o.require(persistent, "blown-up gap not persistent");
  const auto m0 = minimality_probe(rep, p0 + 0.25, 8, threshold);
  bool shrinking = true;
  for (int d = 5; d <= 8; ++d) shrinking = shrinking && m0.by_depth[d].max_gap <= m0.by_depth[d - 1].max_gap;
  o.require(shrinking, "base max gap not shrinking from depth 4 to 8");
  o.detail << "blown gap " << mb.by_depth.back().max_gap << ", base gap " << m0.by_depth[4].max_gap << " -> "
           << m0.by_depth[8].max_gap << "; ";

  const auto mesh = realize_mesh(blown);
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<std::uint32_t> gen(0, 3), len(1, 6);
  int agree = 0;
  for (int i = 0; i < 20; ++i) {
    Word w;
    for (std::uint32_t k = len(rng); k > 0; --k) w.push_back({gen(rng), gen(rng) % 2 == 1});
    const auto rb = rotation_number(rep.evaluate_word(w));
    const auto rm = rotation_number(mesh.rep.evaluate_word(w));
    agree += overlaps_mod1(rb, rm, mesh.rep.tolerance());
  }
  o.require(agree == 20, "rotation numbers of sampled words");
  o.detail << agree << "/20 sampled rotation numbers agree";
}

void ac10(Outcome& o) {
  std::mt19937_64 rng(10);
  int width_ok = 0, inverse_ok = 0, conj_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const auto f = i % 4 == 0 ? test_support::random_pl(rng) : test_support::random_moebius(rng);
    const std::int64_t n = 10000;
    width_ok += translation_number(canonical_lift(f), n).width() <= 2.0 / n + 1e-15;
    const auto r = rotation_number(f, n);
    inverse_ok += overlaps_mod1(rotation_number(inverse(f), n), -r);
    conj_ok += overlaps_mod1(rotation_number(conjugate(test_support::random_homeo(rng), f), n), r, 1e-9);
  }
  o.require(width_ok == 100, "interval widths");
  o.require(inverse_ok == 100, "rot(f^-1) = -rot(f)");
  o.require(conj_ok == 100, "conjugacy invariance");
  int exact_zero = 0;
  for (int i = 0; i < 50; ++i) {
    MoebiusTransform m;
    do {
      m = *test_support::random_moebius(rng).as_moebius();
    } while (classify_moebius(m) == MoebiusKind::Elliptic);
    if (i % 10 == 0) m = MoebiusTransform::from_entries(1, 0.5 + i, 0, 1);  // parabolic
    const auto r = rotation_number(CircleHomeo::moebius(m));
    exact_zero += r.exact && r.rational && *r.rational == Rational(0);
  }
  o.require(exact_zero == 50, "hyperbolic/parabolic rotation numbers not exactly 0");
  o.detail << width_ok << "/100 widths, " << inverse_ok << "/100 inverses, " << conj_ok << "/100 conjugates, "
           << exact_zero << "/50 exact zeros";
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome&)>> criteria{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("AC%zu %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
