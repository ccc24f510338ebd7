#include "crig/circle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "crig/error.hpp"

namespace crig {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClassifyTol = 1e-9;

double floor_split(double x, double& unit) {
  const double fl = std::floor(x);
  unit = x - fl;
  if (unit >= 1.0) unit = 0.0;
  return fl;
}

// Raw Moebius lift on [0, 1): t + (arg(alpha) + Arg(1 + ratio e^{-2 pi i t})) / pi.
double moebius_raw_unit(std::complex<double> ratio, double arg_alpha_over_pi, double t) {
  const double c = std::cos(kTwoPi * t);
  const double s = std::sin(kTwoPi * t);
  const double re = 1.0 + ratio.real() * c + ratio.imag() * s;
  const double im = ratio.imag() * c - ratio.real() * s;
  return t + arg_alpha_over_pi + std::atan2(im, re) / kPi;
}

double moebius_raw(std::complex<double> ratio, double arg_alpha_over_pi, double x) {
  double unit = 0.0;
  const double fl = floor_split(x, unit);
  return fl + moebius_raw_unit(ratio, arg_alpha_over_pi, unit);
}

// Knots have x in [0, 1); evaluates the periodic extension on [0, 1).
double pl_unit(const std::vector<Breakpoint>& br, double t) {
  const auto it = std::upper_bound(br.begin(), br.end(), t, [](double v, const Breakpoint& b) { return v < b.x; });
  Breakpoint lo, hi;
  if (it == br.begin()) {
    lo = {br.back().x - 1.0, br.back().y - 1.0};
    hi = br.front();
  } else if (it == br.end()) {
    lo = br.back();
    hi = {br.front().x + 1.0, br.front().y + 1.0};
  } else {
    lo = *(it - 1);
    hi = *it;
  }
  const double w = (t - lo.x) / (hi.x - lo.x);
  return lo.y + w * (hi.y - lo.y);
}

double pl_raw(const std::vector<Breakpoint>& br, double x) {
  double unit = 0.0;
  const double fl = floor_split(x, unit);
  return fl + pl_unit(br, unit);
}

void validate_breaks(const std::vector<Breakpoint>& br) {
  if (br.empty()) throw InputError("piecewise-linear map needs at least one breakpoint");
  for (std::size_t i = 0; i < br.size(); ++i) {
    if (!std::isfinite(br[i].x) || !std::isfinite(br[i].y)) throw InputError("piecewise-linear breakpoint is not finite");
    if (br[i].x < 0.0 || br[i].x >= 1.0) throw InputError("piecewise-linear breakpoint x outside [0, 1)");
    if (i > 0 && !(br[i].x > br[i - 1].x)) throw InputError("piecewise-linear breakpoints x not strictly increasing");
    if (i > 0 && !(br[i].y > br[i - 1].y)) throw InputError("piecewise-linear image breakpoints not strictly increasing");
  }
  if (!(br.back().y < br.front().y + 1.0)) throw InputError("piecewise-linear map is not of degree one");
}

// Knots of the inverse lift: swap coordinates and translate each knot by an
// integer so that the new x lands in [0, 1).
std::vector<Breakpoint> swap_breaks(const std::vector<Breakpoint>& br) {
  std::vector<Breakpoint> out;
  out.reserve(br.size());
  for (const auto& b : br) {
    double k = std::floor(b.y);
    if (b.y - k >= 1.0) k += 1.0;
    out.push_back({b.y - k, b.x - k});
  }
  std::sort(out.begin(), out.end(), [](const Breakpoint& p, const Breakpoint& q) { return p.x < q.x; });
  return out;
}

double letter_lift(const GeneratorTable& t, Letter l, double x) {
  const auto& img = t.images()[l.generator];
  return l.inverse ? img.lift_inverse(x) : img.lift(x);
}

double letter_lift_inverse(const GeneratorTable& t, Letter l, double y) {
  const auto& img = t.images()[l.generator];
  return l.inverse ? img.lift(y) : img.lift_inverse(y);
}

double word_raw(const CircleHomeo::WordMap& w, double x) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) x = letter_lift(*w.table, *it, x);
  return x;
}

std::shared_ptr<const GeneratorTable> fresh_table(std::string id, std::vector<CircleHomeo> images) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < images.size(); ++i) names.push_back("x" + std::to_string(i));
  return std::make_shared<const GeneratorTable>(std::move(id), std::move(names), std::move(images));
}

Angle negate(const Angle& a) {
  return std::visit([](const auto& v) -> Angle { return -v; }, a);
}

Angle add(const Angle& a, const Angle& b) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
    return std::get<Rational>(a) + std::get<Rational>(b);
  }
  return to_double(a) + to_double(b);
}

}  // namespace

double normalize_turns(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r = 0.0;
  return r;
}

double circle_distance(CirclePoint p, CirclePoint q) {
  const double d = std::fabs(p.turns() - q.turns());
  return std::min(d, 1.0 - d);
}

double turns_from_real(double x) {
  if (std::isinf(x)) return 0.0;
  return normalize_turns(std::atan2(-2.0 * x, x * x - 1.0) / kTwoPi);
}

double real_from_turns(double turns) {
  const double t = normalize_turns(turns);
  if (t == 0.0) return INFINITY;
  return -std::cos(kPi * t) / std::sin(kPi * t);
}

std::string to_string(MoebiusKind kind) {
  switch (kind) {
    case MoebiusKind::Identity: return "identity";
    case MoebiusKind::Elliptic: return "elliptic";
    case MoebiusKind::Parabolic: return "parabolic";
    case MoebiusKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

MoebiusTransform MoebiusTransform::from_entries(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!std::isfinite(det) || !(det > 0.0)) {
    std::ostringstream os;
    os << "Moebius matrix has non-positive or non-finite determinant " << det;
    throw IllConditionedError(os.str());
  }
  const double s = 1.0 / std::sqrt(det);
  a *= s, b *= s, c *= s, d *= s;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) a = -a, b = -b, c = -c, d = -d;
  return MoebiusTransform(a, b, c, d);
}

MoebiusTransform MoebiusTransform::from_disk(std::complex<double> alpha, std::complex<double> beta) {
  return from_entries(alpha.real() + beta.real(), alpha.imag() - beta.imag(), -alpha.imag() - beta.imag(),
                      alpha.real() - beta.real());
}

MoebiusTransform MoebiusTransform::disk_rotation(double angle) {
  return from_disk(std::polar(1.0, 0.5 * angle), 0.0);
}

MoebiusTransform MoebiusTransform::inverse() const { return from_entries(d_, -b_, -c_, a_); }

MoebiusTransform MoebiusTransform::operator*(const MoebiusTransform& r) const {
  return from_entries(a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_, c_ * r.a_ + d_ * r.c_, c_ * r.b_ + d_ * r.d_);
}

std::complex<double> MoebiusTransform::disk_alpha() const { return {0.5 * (a_ + d_), 0.5 * (b_ - c_)}; }
std::complex<double> MoebiusTransform::disk_beta() const { return {0.5 * (a_ - d_), -0.5 * (b_ + c_)}; }

kernels::Su11 MoebiusTransform::disk() const {
  const auto al = disk_alpha();
  const auto be = disk_beta();
  return {al.real(), al.imag(), be.real(), be.imag()};
}

double MoebiusTransform::identity_residual() const {
  const double plus = std::max({std::fabs(a_ - 1.0), std::fabs(b_), std::fabs(c_), std::fabs(d_ - 1.0)});
  const double minus = std::max({std::fabs(a_ + 1.0), std::fabs(b_), std::fabs(c_), std::fabs(d_ + 1.0)});
  return std::min(plus, minus);
}

bool approx_equal(const MoebiusTransform& m, const MoebiusTransform& n, double tol) {
  const double same = std::max({std::fabs(m.a_ - n.a_), std::fabs(m.b_ - n.b_), std::fabs(m.c_ - n.c_), std::fabs(m.d_ - n.d_)});
  const double flip = std::max({std::fabs(m.a_ + n.a_), std::fabs(m.b_ + n.b_), std::fabs(m.c_ + n.c_), std::fabs(m.d_ + n.d_)});
  return std::min(same, flip) <= tol;
}

MoebiusKind classify_moebius(const MoebiusTransform& m) {
  if (m.identity_residual() <= kClassifyTol) return MoebiusKind::Identity;
  const double t = std::fabs(m.trace());
  if (std::fabs(t - 2.0) <= kClassifyTol) return MoebiusKind::Parabolic;
  return t < 2.0 ? MoebiusKind::Elliptic : MoebiusKind::Hyperbolic;
}

std::vector<FixedPoint> fixed_points(const MoebiusTransform& m) {
  const MoebiusKind kind = classify_moebius(m);
  if (kind == MoebiusKind::Elliptic) throw NoFixedPointError("elliptic Moebius map has no boundary fixed point");
  if (kind == MoebiusKind::Identity) throw NoFixedPointError("identity has no isolated fixed points");
  const auto alpha = m.disk_alpha();
  const auto beta = m.disk_beta();
  const std::complex<double> beta_bar = std::conj(beta);
  // conj(beta) w^2 - 2 i Im(alpha) w - beta = 0
  const double s = kind == MoebiusKind::Parabolic ? 0.0 : std::sqrt(std::max(0.0, alpha.real() * alpha.real() - 1.0));
  auto make = [&](double sign) {
    std::complex<double> w = std::complex<double>(sign * s, alpha.imag()) / beta_bar;
    w /= std::abs(w);
    const double turns = normalize_turns(std::arg(w) / kTwoPi);
    const double scale = std::norm(beta_bar * w + std::conj(alpha));
    Stability st = Stability::Neutral;
    if (kind == MoebiusKind::Hyperbolic) st = scale > 1.0 ? Stability::Attracting : Stability::Repelling;
    return FixedPoint{CirclePoint(turns), st};
  };
  if (kind == MoebiusKind::Parabolic) return {make(1.0)};
  return {make(1.0), make(-1.0)};
}

double to_double(const Angle& a) {
  return std::visit([](const auto& v) -> double {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>) return crig::to_double(v);
    else return v;
  }, a);
}

// ---------------------------------------------------------------------------
// CircleHomeo

CircleHomeo::CircleHomeo() : v_(Rotation{Rational(0), 0.0}) {}

CircleHomeo CircleHomeo::moebius(const MoebiusTransform& m) {
  Moebius mo;
  mo.matrix = m;
  const auto alpha = m.disk_alpha();
  const auto beta = m.disk_beta();
  mo.ratio = beta / alpha;
  mo.arg_alpha_over_pi = std::arg(alpha) / kPi;
  const auto alpha_inv = std::conj(alpha);
  mo.inv_ratio = -beta / alpha_inv;
  mo.inv_arg_alpha_over_pi = std::arg(alpha_inv) / kPi;
  const double raw0 = moebius_raw_unit(mo.ratio, mo.arg_alpha_over_pi, 0.0);
  mo.shift = std::floor(raw0);
  mo.inv_shift = std::round(moebius_raw(mo.inv_ratio, mo.inv_arg_alpha_over_pi, raw0));
  if (!std::isfinite(raw0)) throw IllConditionedError("Moebius lift is not finite");
  return CircleHomeo(std::move(mo));
}

CircleHomeo CircleHomeo::rotation(const Rational& turns) {
  return CircleHomeo(Rotation{turns, crig::to_double(frac(turns))});
}

CircleHomeo CircleHomeo::rotation(double turns) {
  if (!std::isfinite(turns)) throw InputError("rotation angle is not finite");
  return CircleHomeo(Rotation{turns, normalize_turns(turns)});
}

CircleHomeo CircleHomeo::piecewise_linear(std::vector<Breakpoint> breaks) {
  validate_breaks(breaks);
  PiecewiseLinear pl;
  pl.inverse_breaks = swap_breaks(breaks);
  pl.breaks = std::move(breaks);
  pl.shift = std::floor(pl_unit(pl.breaks, 0.0));
  return CircleHomeo(std::move(pl));
}

CircleHomeo CircleHomeo::word(std::shared_ptr<const GeneratorTable> table, Word w) {
  if (!table) throw InputError("word map without a generator table");
  for (const Letter& l : w) {
    if (l.generator >= table->size()) throw UnknownGeneratorError("word letter outside generator table '" + table->id() + "'");
  }
  WordMap wm{std::move(table), reduce(std::move(w)), 0.0};
  wm.shift = std::floor(word_raw(wm, 0.0));
  return CircleHomeo(std::move(wm));
}

double CircleHomeo::lift(double x) const {
  return std::visit([x](const auto& v) -> double {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, Moebius>) {
      return moebius_raw(v.ratio, v.arg_alpha_over_pi, x) - v.shift;
    } else if constexpr (std::is_same_v<T, Rotation>) {
      return x + v.step;
    } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
      return pl_raw(v.breaks, x) - v.shift;
    } else {
      return word_raw(v, x) - v.shift;
    }
  }, v_);
}

double CircleHomeo::lift_inverse(double y) const {
  return std::visit([y](const auto& v) -> double {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, Moebius>) {
      return moebius_raw(v.inv_ratio, v.inv_arg_alpha_over_pi, y + v.shift) - v.inv_shift;
    } else if constexpr (std::is_same_v<T, Rotation>) {
      return y - v.step;
    } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
      return pl_raw(v.inverse_breaks, y + v.shift);
    } else {
      double u = y + v.shift;
      for (const Letter& l : v.word) u = letter_lift_inverse(*v.table, l, u);
      return u;
    }
  }, v_);
}

CirclePoint CircleHomeo::operator()(CirclePoint p) const {
  const double y = lift(p.turns());
  if (!std::isfinite(y)) throw IllConditionedError("evaluation produced a non-finite value");
  return CirclePoint(y);
}

CircleHomeo CircleHomeo::inverse() const {
  return std::visit([](const auto& v) -> CircleHomeo {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, Moebius>) {
      return CircleHomeo::moebius(v.matrix.inverse());
    } else if constexpr (std::is_same_v<T, Rotation>) {
      return std::holds_alternative<Rational>(v.angle) ? CircleHomeo::rotation(-std::get<Rational>(v.angle))
                                                       : CircleHomeo::rotation(-std::get<double>(v.angle));
    } else if constexpr (std::is_same_v<T, PiecewiseLinear>) {
      return CircleHomeo::piecewise_linear(v.inverse_breaks);
    } else {
      return CircleHomeo::word(v.table, crig::inverse(v.word));
    }
  }, v_);
}

const MoebiusTransform* CircleHomeo::as_moebius() const {
  const auto* m = std::get_if<Moebius>(&v_);
  return m ? &m->matrix : nullptr;
}

const Angle* CircleHomeo::as_rotation() const {
  const auto* r = std::get_if<Rotation>(&v_);
  return r ? &r->angle : nullptr;
}

std::string CircleHomeo::kind_name() const {
  static constexpr std::array<const char*, 4> names{"moebius", "rotation", "pl", "word"};
  return names[v_.index()];
}

bool CircleHomeo::is_identity(double tol) const {
  if (const auto* m = as_moebius()) return m->identity_residual() <= tol;
  if (const auto* r = std::get_if<Rotation>(&v_)) return std::min(r->step, 1.0 - r->step) <= tol;
  for (int i = 0; i < 64; ++i) {
    const CirclePoint p(i / 64.0);
    if (circle_distance((*this)(p), p) > tol) return false;
  }
  return true;
}

GeneratorTable::GeneratorTable(std::string id, std::vector<std::string> names, std::vector<CircleHomeo> images)
    : id_(std::move(id)), names_(std::move(names)), images_(std::move(images)) {
  if (names_.size() != images_.size()) throw InputError("generator table: names and images differ in count");
}

CirclePoint evaluate(const CircleHomeo& f, CirclePoint p) { return f(p); }

void evaluate_batch(const CircleHomeo& f, std::span<const double> turns, std::span<double> out) {
  if (out.size() != turns.size()) throw InputError("evaluate_batch: size mismatch");
  if (const auto* m = f.as_moebius()) {
    std::vector<double> re(turns.size()), im(turns.size());
    for (std::size_t i = 0; i < turns.size(); ++i) {
      re[i] = std::cos(kTwoPi * turns[i]);
      im[i] = std::sin(kTwoPi * turns[i]);
    }
    kernels::apply_su11(m->disk(), {re, im}, {re, im});
    for (std::size_t i = 0; i < turns.size(); ++i) out[i] = normalize_turns(std::atan2(im[i], re[i]) / kTwoPi);
    return;
  }
  for (std::size_t i = 0; i < turns.size(); ++i) out[i] = f(CirclePoint(turns[i])).turns();
}

CircleHomeo compose(const CircleHomeo& f, const CircleHomeo& g) {
  if (const auto* mf = f.as_moebius()) {
    if (const auto* mg = g.as_moebius()) return CircleHomeo::moebius(*mf * *mg);
  }
  if (const auto* rf = f.as_rotation()) {
    if (const auto* rg = g.as_rotation()) {
      const Angle sum = add(*rf, *rg);
      return std::holds_alternative<Rational>(sum) ? CircleHomeo::rotation(std::get<Rational>(sum))
                                                   : CircleHomeo::rotation(std::get<double>(sum));
    }
  }
  const auto* wf = std::get_if<CircleHomeo::WordMap>(&f.variant());
  const auto* wg = std::get_if<CircleHomeo::WordMap>(&g.variant());
  if (wf && wg) {
    if (wf->table != wg->table) {
      throw CompositionDomainError("cannot compose words over different representations ('" + wf->table->id() +
                                   "' and '" + wg->table->id() + "')");
    }
    return CircleHomeo::word(wf->table, concat(wf->word, wg->word));
  }
  return CircleHomeo::word(fresh_table("compose", {f, g}), {Letter{0, false}, Letter{1, false}});
}

CircleHomeo inverse(const CircleHomeo& f) { return f.inverse(); }

CircleHomeo power(const CircleHomeo& f, int k) {
  if (k == 0) return CircleHomeo::identity();
  if (k < 0) return power(f.inverse(), -k);
  if (const auto* m = f.as_moebius()) {
    MoebiusTransform acc;
    for (int i = 0; i < k; ++i) acc = acc * *m;
    return CircleHomeo::moebius(acc);
  }
  if (const auto* r = f.as_rotation()) {
    if (std::holds_alternative<Rational>(*r)) return CircleHomeo::rotation(std::get<Rational>(*r) * Rational(k));
    return CircleHomeo::rotation(std::get<double>(*r) * k);
  }
  if (const auto* w = std::get_if<CircleHomeo::WordMap>(&f.variant())) {
    return CircleHomeo::word(w->table, crig::power(w->word, k));
  }
  return CircleHomeo::word(fresh_table("power", {f}), Word(static_cast<std::size_t>(k), Letter{0, false}));
}

CircleHomeo conjugate(const CircleHomeo& h, const CircleHomeo& f) { return compose(compose(h, f), h.inverse()); }

double distortion(const CircleHomeo& h) {
  if (const auto* m = h.as_moebius()) {
    const double k = 0.5 * (m->a() * m->a() + m->b() * m->b() + m->c() * m->c() + m->d() * m->d());
    return k * k;
  }
  if (const auto* pl = std::get_if<CircleHomeo::PiecewiseLinear>(&h.variant())) {
    const auto& br = pl->breaks;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < br.size(); ++i) {
      const Breakpoint next = i + 1 < br.size() ? br[i + 1] : Breakpoint{br[0].x + 1.0, br[0].y + 1.0};
      const double slope = (next.y - br[i].y) / (next.x - br[i].x);
      lo = std::min(lo, slope);
      hi = std::max(hi, slope);
    }
    return hi / lo;
  }
  return 1.0;
}

CircleHomeo flip_orientation(const CircleHomeo& f) {
  return std::visit([](const auto& v) -> CircleHomeo {
    using T = std::decay_t<decltype(v)>;
    if constexpr (std::is_same_v<T, CircleHomeo::Moebius>) {
      const auto& m = v.matrix;
      return CircleHomeo::moebius(MoebiusTransform::from_entries(m.a(), -m.b(), -m.c(), m.d()));
    } else if constexpr (std::is_same_v<T, CircleHomeo::Rotation>) {
      const Angle a = negate(v.angle);
      return std::holds_alternative<Rational>(a) ? CircleHomeo::rotation(std::get<Rational>(a))
                                                 : CircleHomeo::rotation(std::get<double>(a));
    } else if constexpr (std::is_same_v<T, CircleHomeo::PiecewiseLinear>) {
      std::vector<Breakpoint> out;
      for (const auto& b : v.breaks) {
        double k = std::ceil(b.x);
        if (-b.x + k >= 1.0) k -= 1.0;
        out.push_back({-b.x + k, -b.y + k});
      }
      std::sort(out.begin(), out.end(), [](const Breakpoint& p, const Breakpoint& q) { return p.x < q.x; });
      return CircleHomeo::piecewise_linear(std::move(out));
    } else {
      std::vector<CircleHomeo> images;
      for (const auto& img : v.table->images()) images.push_back(flip_orientation(img));
      auto table = std::make_shared<const GeneratorTable>(v.table->id() + "~flip", v.table->names(), std::move(images));
      return CircleHomeo::word(std::move(table), v.word);
    }
  }, f.variant());
}

LiftedHomeo canonical_lift(const CircleHomeo& f) { return LiftedHomeo(f, 0); }

LiftedHomeo compose(const LiftedHomeo& F, const LiftedHomeo& G) {
  CircleHomeo base = compose(F.base(), G.base());
  const double k = std::round(F(G(0.0)) - base.lift(0.0));
  return LiftedHomeo(std::move(base), static_cast<std::int64_t>(k));
}

LiftedHomeo inverse(const LiftedHomeo& F) {
  CircleHomeo base = F.base().inverse();
  const double k = std::round(F.inverse_at(0.0) - base.lift(0.0));
  return LiftedHomeo(std::move(base), static_cast<std::int64_t>(k));
}

}  // namespace crig
