#include "crig/euler.hpp"

#include <algorithm>
#include <cmath>

#include "crig/error.hpp"
#include "crig/parallel.hpp"

namespace crig {
namespace {

constexpr double kIntegerTolerance = 1e-6;

Word gen(std::uint32_t i) { return Word{{i, false}}; }

Word handle_commutator(int i) { return commutator(gen(2 * i), gen(2 * i + 1)); }

std::optional<Rational> unique_integer(const CertifiedInterval& v) {
  if (v.exact) {
    if (v.rational) return *v.rational;
    const double r = std::round(v.lo);
    if (r == v.lo) return Rational(static_cast<std::int64_t>(r));
    return std::nullopt;
  }
  const double lo = std::ceil(v.lo);
  const double hi = std::floor(v.hi);
  if (lo != hi) return std::nullopt;
  return Rational(static_cast<std::int64_t>(lo));
}

// Translation amount of a lifted word that acts trivially on the circle.
std::int64_t integer_translation(const Representation& rep, const Word& w) {
  const double t = rep.lift_word(w, 0.0);
  const double k = std::round(t);
  for (double x : {0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875}) {
    const double d = rep.lift_word(w, x) - x - k;
    if (!(std::fabs(d) <= std::max(kIntegerTolerance, rep.tolerance()))) {
      throw PrecisionError("lifted relator is not an integer translation (defect " + std::to_string(d) + ")");
    }
  }
  return static_cast<std::int64_t>(k);
}

}  // namespace

PantsDecomposition canonical_pants(int genus) {
  if (genus < 2) throw InputError("pants decomposition needs genus >= 2");
  PantsDecomposition out;
  for (int i = 0; i < genus; ++i) {
    const Word a = gen(2 * i);
    const Word b = gen(2 * i + 1);
    out.pants.push_back({handle_commutator(i), concat(concat(b, a), inverse(b)), inverse(a)});
  }
  Word prefix = handle_commutator(0);
  for (int k = 2; k <= genus - 1; ++k) {
    const Word c = handle_commutator(k - 1);
    const Word next = concat(prefix, c);
    out.pants.push_back({next, inverse(c), inverse(prefix)});
    prefix = next;
  }
  return out;
}

void validate_pants(const PantsDecomposition& pants, int genus) {
  if (pants.pants.size() != static_cast<std::size_t>(2 * genus - 2)) {
    throw InputError("pants decomposition of genus " + std::to_string(genus) + " needs " + std::to_string(2 * genus - 2) +
                     " pants, got " + std::to_string(pants.pants.size()));
  }
  for (const auto& p : pants.pants) {
    if (!is_freely_trivial(concat(concat(p[0], p[1]), p[2]))) throw InputError("pants triple whose product is not trivial");
    for (const auto& w : p)
      for (const Letter& l : w)
        if (l.generator >= static_cast<std::uint32_t>(2 * genus)) throw UnknownGeneratorError("pants word letter out of range");
  }
}

EulerNumber euler_relator(const SurfaceGroupRep& rep) {
  if (!rep.is_surface()) throw InputError("euler_relator needs a closed surface representation");
  const Word relator = rep.presentation().relators.back();
  const double residual = rep.word_residual(relator);
  if (!(residual <= rep.tolerance())) {
    throw InvalidRepresentationError("surface relator residual " + std::to_string(residual) + " exceeds tolerance");
  }
  const std::int64_t t = integer_translation(rep, relator);
  EulerNumber e;
  e.value = CertifiedInterval::of_integer(-t);
  e.isolated = Rational(-t);
  e.method = "relator";
  return e;
}

EulerNumber euler_pants(const SurfaceGroupRep& rep, const PantsDecomposition& pants, std::int64_t n, int jobs,
                        std::vector<PantsTerm>* terms) {
  if (!rep.is_surface()) throw InputError("euler_pants needs a closed surface representation");
  validate_pants(pants, rep.genus());
  const std::size_t count = pants.pants.size();
  std::vector<CircleHomeo> xs, ys;
  for (const auto& p : pants.pants) {
    xs.push_back(rep.evaluate_word(p[0]));
    ys.push_back(rep.evaluate_word(p[1]));
  }
  std::vector<CertifiedInterval> tau(count);
  std::vector<bool> done(count, false);
  for (std::int64_t iters = std::max<std::int64_t>(n, 1);; iters *= 10) {
    parallel_for(count, jobs, [&](std::size_t i) {
      if (!done[i]) tau[i] = translation_cocycle(xs[i], ys[i], iters).value;
    });
    CertifiedInterval sum = CertifiedInterval::of_integer(0);
    for (std::size_t i = 0; i < count; ++i) {
      sum = sum + tau[i];
      done[i] = tau[i].exact;
    }
    if (auto v = unique_integer(sum); v && v->denominator() == 1) {
      if (terms) {
        terms->clear();
        for (const auto& t : tau) terms->push_back({t});
      }
      return EulerNumber{sum, v, iters, "pants"};
    }
    if (iters >= kMaxIterations) {
      throw IsolationError("pants sum [" + std::to_string(sum.lo) + ", " + std::to_string(sum.hi) +
                           "] isolates no unique integer at n = " + std::to_string(iters));
    }
  }
}

EulerComparison euler_both(const SurfaceGroupRep& rep, const PantsDecomposition& pants, std::int64_t n, int jobs) {
  EulerComparison out{euler_relator(rep), euler_pants(rep, pants, n, jobs)};
  if (*out.relator.isolated != *out.pants.isolated) {
    throw CrossValidationError("Euler number methods disagree: relator " + to_string(*out.relator.isolated) + ", pants " +
                               to_string(*out.pants.isolated));
  }
  return out;
}

EulerNumber euler_orbifold(const OrbifoldRep& rep) { return euler_orbifold(rep, nullptr); }

EulerNumber euler_orbifold(const OrbifoldRep& rep, OrbifoldEulerDetail* detail) {
  const OrbifoldSignature& sig = rep.signature();
  const Word relator = long_relator(sig);
  const double residual = rep.word_residual(relator);
  if (!(residual <= rep.tolerance())) {
    throw InvalidRepresentationError("long relator residual " + std::to_string(residual) + " exceeds tolerance");
  }
  const std::int64_t t = integer_translation(rep, relator);
  Rational eu(-t);
  std::vector<Rational> cones;
  for (std::size_t i = 0; i < sig.periods.size(); ++i) {
    const int m = sig.periods[i];
    const auto fo = exact_rotation_number_finite_order(rep.images()[cone_generator(sig, i)], m);
    if (!fo || m % fo->order != 0) {
      throw PrecisionError("cone generator " + rep.presentation().generators[cone_generator(sig, i)] +
                           " has no finite order dividing " + std::to_string(m));
    }
    cones.push_back(fo->translation);
    eu += fo->translation;
  }
  if (detail) *detail = {t, cones};
  return EulerNumber{CertifiedInterval::of_rational(eu), eu, 0, "orbifold"};
}

Certificate check_milnor_wood(const Rational& e, int genus) {
  const Rational bound(2 * static_cast<std::int64_t>(genus) - 2);
  const bool pass = abs(e) <= bound;
  return {"milnor_wood", pass, "|" + to_string(e) + "| <= " + to_string(bound) + (abs(e) == bound ? " (equality)" : "")};
}

Certificate check_multiplicativity(const Rational& orbifold_eu, std::int64_t index, const Rational& surface_eu) {
  const Rational lhs = abs(Rational(index) * orbifold_eu);
  const bool pass = lhs == abs(surface_eu);
  return {"multiplicativity", pass,
          std::to_string(index) + " * |" + to_string(orbifold_eu) + "| = " + to_string(lhs) + " vs |" +
              to_string(surface_eu) + "|"};
}

ThirdsQuarters split_thirds_quarters(const Rational& e) {
  const Rational twelve = e * Rational(12);
  if (twelve.denominator() != 1) throw InputError(to_string(e) + " is not a multiple of 1/12");
  const std::int64_t n = twelve.numerator();
  // n = 4k + 3m, so 3m = n mod 4 and m = -n mod 4
  const std::int64_t m = ((-n) % 4 + 4) % 4;
  return {(n - 3 * m) / 4, m};
}

}  // namespace crig
