#include "crig/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "crig/error.hpp"
#include "crig/kernels.hpp"

namespace crig {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kVerifyTol = 1e-9;
constexpr double kBisectTol = 1e-14;

// (alpha beta; conj(beta) conj(alpha)). Reflections w -> (alpha conj(w) + beta) / (conj(beta) conj(w) + conj(alpha))
// use the same storage.
struct Su {
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};
};

Su mul(const Su& x, const Su& y) {
  return {x.alpha * y.alpha + x.beta * std::conj(y.beta), x.alpha * y.beta + x.beta * std::conj(y.alpha)};
}

Su rotation(double phi) { return {std::polar(1.0, 0.5 * phi), 0.0}; }
Su translation(double d) { return {std::cosh(d), std::sinh(d)}; }

Su reflect_line(double theta) { return {std::polar(1.0, theta), 0.0}; }
// Geodesic orthogonal to the unit circle, Euclidean centre c0 (|c0| > 1).
Su reflect_circle(cplx c0) {
  const double rho = std::sqrt(std::norm(c0) - 1.0);
  return {cplx(0.0, 1.0) * c0 / rho, cplx(0.0, -1.0 / rho)};
}
// r1 after r2 is the holomorphic map M1 conj(M2).
Su reflect_product(const Su& r1, const Su& r2) { return mul(r1, {std::conj(r2.alpha), std::conj(r2.beta)}); }

MoebiusTransform to_moebius(const Su& m) { return MoebiusTransform::from_disk(m.alpha, m.beta); }

void check_traces(const Representation& rep, const std::vector<int>& periods, const std::vector<std::uint32_t>& gens) {
  for (std::size_t i = 0; i < periods.size(); ++i) {
    const double tr = std::fabs(rep.images()[gens[i]].as_moebius()->trace());
    const double want = 2.0 * std::cos(kPi / periods[i]);
    if (std::fabs(tr - want) > kVerifyTol) {
      throw ConstructionError("generator " + rep.presentation().generators[gens[i]] + " has trace " + std::to_string(tr) +
                              ", expected " + std::to_string(want));
    }
  }
}

double max_relator_residual(const Representation& rep) {
  double worst = 0.0;
  for (const Word& r : rep.presentation().relators) worst = std::max(worst, rep.word_residual(r));
  if (!(worst <= kVerifyTol)) throw ConstructionError("relator residual " + std::to_string(worst) + " above 1e-9");
  return worst;
}

double fixed_vertex_defect(const MoebiusTransform& m, cplx v) { return std::abs(apply_disk(m, v) - v); }

// Interior angle of the regular n-gon with circumradius R, from the right
// triangle (centre, vertex, side midpoint): cosh R = cot(pi/n) cot(angle/2).
double regular_polygon_angle(int n, double R) { return 2.0 * std::atan(1.0 / (std::tan(kPi / n) * std::cosh(R))); }

}  // namespace

HyperbolicPoint HyperbolicPoint::upper(double x, double y) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) throw InputError("upper half-plane point needs y > 0");
  return {Model::UpperHalfPlane, {x, y}};
}

HyperbolicPoint HyperbolicPoint::disk(std::complex<double> w) {
  if (!(std::abs(w) < 1.0)) throw InputError("disk point needs |w| < 1");
  return {Model::Disk, w};
}

HyperbolicPoint HyperbolicPoint::to_disk() const {
  if (model_ == Model::Disk) return *this;
  const cplx i(0.0, 1.0);
  return {Model::Disk, (z_ - i) / (z_ + i)};
}

HyperbolicPoint HyperbolicPoint::to_upper() const {
  if (model_ == Model::UpperHalfPlane) return *this;
  const cplx i(0.0, 1.0);
  const cplx z = i * (1.0 + z_) / (1.0 - z_);
  return {Model::UpperHalfPlane, {z.real(), std::max(z.imag(), std::numeric_limits<double>::min())}};
}

std::complex<double> apply_disk(const MoebiusTransform& m, std::complex<double> w) {
  const cplx al = m.disk_alpha();
  const cplx be = m.disk_beta();
  return (al * w + be) / (std::conj(be) * w + std::conj(al));
}

GeometricRep build_surface_group(int genus) {
  if (genus < 2) throw InputError("surface group needs genus >= 2");
  const int n = 4 * genus;
  const double target = 2.0 * kPi / n;
  // The interior angle decreases from (n-2) pi / n towards 0 as R grows.
  double lo = 0.0, hi = 1.0;
  while (regular_polygon_angle(n, hi) > target) {
    hi *= 2.0;
    if (hi > 1e3) throw ConstructionError("circumradius bracket failed");
  }
  while (hi - lo > kBisectTol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (regular_polygon_angle(n, mid) > target) lo = mid; else hi = mid;
  }
  const double R = 0.5 * (lo + hi);
  // Distance from the centre to a side midpoint.
  const double dmid = std::atanh(std::tanh(R) * std::cos(kPi / n));
  auto phi = [n](int k) { return 2.0 * kPi * (k + 0.5) / n; };
  // Side k -> side j: rotate side k's midpoint to the negative real axis,
  // translate through the origin onto the positive axis, rotate to side j.
  auto pairing = [&](int k, int j) { return mul(mul(rotation(phi(j)), translation(dmid)), rotation(kPi - phi(k))); };

  std::vector<cplx> vertices;
  for (int k = 0; k < n; ++k) vertices.push_back(std::polar(std::tanh(0.5 * R), 2.0 * kPi * k / n));

  std::vector<CircleHomeo> images;
  double witness = 0.0;
  for (int i = 0; i < genus; ++i) {
    for (auto [k, j] : {std::pair{4 * i + 2, 4 * i}, std::pair{4 * i + 1, 4 * i + 3}}) {
      const MoebiusTransform m = to_moebius(pairing(k, j));
      const cplx p0 = apply_disk(m, vertices[k]);
      const cplx p1 = apply_disk(m, vertices[(k + 1) % n]);
      const cplx q0 = vertices[j];
      const cplx q1 = vertices[(j + 1) % n];
      witness = std::max(witness, std::min(std::max(std::abs(p0 - q0), std::abs(p1 - q1)),
                                           std::max(std::abs(p0 - q1), std::abs(p1 - q0))));
      if (!(std::fabs(m.trace()) > 2.0)) throw ConstructionError("side pairing is not hyperbolic");
      images.push_back(CircleHomeo::moebius(m));
    }
  }
  if (!(witness <= kVerifyTol)) throw ConstructionError("side pairings do not match polygon vertices");
  Representation rep = surface_rep(genus, std::move(images), "surface-" + std::to_string(genus));
  const double residual = max_relator_residual(rep);
  return GeometricRep{"surface", std::move(rep), std::move(vertices), residual, witness};
}

GeometricRep build_orbifold_2222g(int genus) {
  if (genus < 2) throw InputError("(0;2,2,2,2g) orbifold needs g >= 2");
  const double theta = kPi / (2.0 * genus);
  // Quadrilateral with angles pi/2, pi/2, pi/2 and theta at the origin whose
  // two sides through the origin both have length l:
  // cosh l = cos(pi/4) / sin(theta/2).
  const double cosh_l = std::cos(kPi / 4.0) / std::sin(0.5 * theta);
  if (!(cosh_l > 1.0)) throw ConstructionError("quadrilateral does not exist");
  const double t = std::tanh(0.5 * std::acosh(cosh_l));
  const double centre = (1.0 + t * t) / (2.0 * t);
  const Su r1 = reflect_line(0.0);
  const Su r2 = reflect_circle(centre);
  const Su r3 = reflect_circle(std::polar(centre, theta));
  const Su r4 = reflect_line(theta);
  const std::vector<MoebiusTransform> gens{to_moebius(reflect_product(r1, r2)), to_moebius(reflect_product(r2, r3)),
                                           to_moebius(reflect_product(r3, r4)), to_moebius(reflect_product(r4, r1))};
  const double cb = centre * std::cos(0.5 * theta);
  const cplx far = std::polar(cb - std::sqrt(cb * cb - 1.0), 0.5 * theta);
  std::vector<cplx> vertices{0.0, t, far, std::polar(t, theta)};
  // a fixes the vertex on sides 1, 2; b on 2, 3; c on 3, 4; d on 4, 1.
  const std::vector<cplx> fixed{t, far, std::polar(t, theta), 0.0};
  double witness = 0.0;
  std::vector<CircleHomeo> images;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    witness = std::max(witness, fixed_vertex_defect(gens[i], fixed[i]));
    images.push_back(CircleHomeo::moebius(gens[i]));
  }
  if (!(witness <= kVerifyTol)) throw ConstructionError("rotation centres do not match quadrilateral vertices");
  Representation rep(OrbifoldSignature{0, {2, 2, 2, 2 * genus}}, std::move(images), "2222g-" + std::to_string(genus));
  check_traces(rep, {2, 2, 2, 2 * genus}, {0, 1, 2, 3});
  const double residual = max_relator_residual(rep);
  return GeometricRep{"2222g", std::move(rep), std::move(vertices), residual, witness};
}

GeometricRep build_orbifold_334() {
  const double A = kPi / 3.0, B = kPi / 3.0, C = kPi / 4.0;
  // Side from the pi/4 vertex to a pi/3 vertex, by the hyperbolic law of
  // cosines for angles.
  const double cosh_l = (std::cos(C) * std::cos(A) + std::cos(B)) / (std::sin(C) * std::sin(A));
  const double t = std::tanh(0.5 * std::acosh(cosh_l));
  const double s = (t * t + 1.0) / (2.0 * t * std::cos(kPi / 8.0));
  const Su r1 = reflect_line(0.0);
  const Su r2 = reflect_circle(std::polar(s, kPi / 8.0));
  const Su r3 = reflect_line(kPi / 4.0);
  const std::vector<MoebiusTransform> gens{to_moebius(reflect_product(r1, r2)), to_moebius(reflect_product(r2, r3)),
                                           to_moebius(reflect_product(r3, r1))};
  std::vector<cplx> vertices{0.0, t, std::polar(t, kPi / 4.0)};
  const std::vector<cplx> fixed{t, std::polar(t, kPi / 4.0), 0.0};
  double witness = 0.0;
  std::vector<CircleHomeo> images;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    witness = std::max(witness, fixed_vertex_defect(gens[i], fixed[i]));
    images.push_back(CircleHomeo::moebius(gens[i]));
  }
  if (!(witness <= kVerifyTol)) throw ConstructionError("rotation centres do not match triangle vertices");
  Representation rep(OrbifoldSignature{0, {3, 3, 4}}, std::move(images), "334");
  check_traces(rep, {3, 3, 4}, {0, 1, 2});
  const double residual = max_relator_residual(rep);
  return GeometricRep{"334", std::move(rep), std::move(vertices), residual, witness};
}

Representation boundary_action(const GeometricRep& geo) { return geo.rep; }

std::vector<MoebiusTransform> kernel_matrices(const GeometricRep& geo, const FiniteGroupHom& hom, SchreierResult* schreier) {
  if (hom.source.generators != geo.rep.presentation().generators) {
    throw InputError("hom source does not match the representation's presentation");
  }
  SchreierResult rs = reidemeister_schreier(geo.rep.presentation(), hom);
  std::vector<MoebiusTransform> out;
  for (const Word& w : rs.generators) {
    MoebiusTransform m = geo.rep.evaluate_matrix(w);
    if (std::fabs(m.trace()) < 2.0 - kVerifyTol) {
      throw CertificationError("Schreier generator " + geo.rep.presentation().format(w) + " is elliptic");
    }
    out.push_back(m);
  }
  if (schreier) *schreier = std::move(rs);
  return out;
}

KernelScan scan_kernel_words(const GeometricRep& geo, const FiniteGroupHom& hom, std::size_t target, int max_length,
                             std::uint64_t seed) {
  if (max_length < 1) throw InputError("kernel scan needs max_length >= 1");
  const std::size_t ngens = geo.rep.images().size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, max_length);
  std::uniform_int_distribution<std::size_t> letter_dist(0, 2 * ngens - 1);

  KernelScan scan;
  std::vector<Word> words;
  while (words.size() < target) {
    Word w(static_cast<std::size_t>(len_dist(rng)));
    for (Letter& l : w) {
      const std::size_t k = letter_dist(rng);
      l = {static_cast<std::uint32_t>(k / 2), (k % 2) == 1};
    }
    ++scan.sampled;
    if (hom.evaluate(w) == hom.target->identity()) words.push_back(std::move(w));
    if (scan.sampled > 1000 * (target + 1)) throw CertificationError("kernel scan found too few kernel words");
  }
  scan.kernel_words = words.size();

  // Letter matrices, then batched left-to-right products, padded with I.
  std::vector<MoebiusTransform> letters;
  for (std::size_t g = 0; g < ngens; ++g) {
    letters.push_back(geo.matrix(g));
    letters.push_back(geo.matrix(g).inverse());
  }
  const std::size_t n = words.size();
  std::vector<double> a(n, 1.0), b(n, 0.0), c(n, 0.0), d(n, 1.0);
  std::vector<double> la(n), lb(n), lc(n), ld(n);
  for (int step = 0; step < max_length; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& w = words[i];
      if (static_cast<std::size_t>(step) < w.size()) {
        const auto& m = letters[2 * w[step].generator + (w[step].inverse ? 1 : 0)];
        la[i] = m.a(), lb[i] = m.b(), lc[i] = m.c(), ld[i] = m.d();
      } else {
        la[i] = 1.0, lb[i] = 0.0, lc[i] = 0.0, ld[i] = 1.0;
      }
    }
    kernels::mat2_mul({a, b, c, d}, {la, lb, lc, ld}, {a, b, c, d});
  }
  scan.min_abs_trace = kernels::min_abs_trace({a, b, c, d});
  scan.pass = scan.min_abs_trace >= 2.0 - kVerifyTol;
  return scan;
}

}  // namespace crig
