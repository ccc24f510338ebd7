#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "crig/kernels.hpp"
#include "crig/rational.hpp"
#include "crig/word.hpp"

namespace crig {

/// t - floor(t), guarded so that the result is never 1.0.
double normalize_turns(double t);

/// A point of the circle R/Z, in units of full turns, kept in [0, 1).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double turns) : turns_(normalize_turns(turns)) {}

  double turns() const { return turns_; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  double turns_ = 0.0;
};

/// Length of the shorter arc between two points, in turns.
double circle_distance(CirclePoint p, CirclePoint q);

// Boundary chart: the real line (boundary of the upper half-plane) is mapped
// to the circle by the Cayley transform z -> (z - i)/(z + i); the turn
// coordinate is the argument of the image over 2 pi. Infinity sits at turn 0,
// the point 0 at turn 1/2, and the chart is increasing.
double turns_from_real(double x);
/// Inverse chart, -cot(pi t); turn 0 maps to +infinity.
double real_from_turns(double turns);

enum class MoebiusKind { Identity, Elliptic, Parabolic, Hyperbolic };

std::string to_string(MoebiusKind kind);

/// An element of PSL(2,R) acting on the upper half-plane, stored with
/// determinant 1 and the first nonzero entry of the top row positive.
class MoebiusTransform {
 public:
  MoebiusTransform() = default;

  /// Rescales to determinant 1 and fixes the projective sign. Throws
  /// IllConditionedError unless the determinant is positive and finite.
  static MoebiusTransform from_entries(double a, double b, double c, double d);
  /// From the disk-model (SU(1,1)) form (alpha beta; conj(beta) conj(alpha)).
  static MoebiusTransform from_disk(std::complex<double> alpha, std::complex<double> beta);
  /// Rotation about the disk origin by `angle` radians.
  static MoebiusTransform disk_rotation(double angle);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  double trace() const { return a_ + d_; }
  double determinant() const { return a_ * d_ - b_ * c_; }

  MoebiusTransform inverse() const;
  MoebiusTransform operator*(const MoebiusTransform& rhs) const;

  /// Cayley-conjugated SU(1,1) coefficients acting on the unit disk.
  std::complex<double> disk_alpha() const;
  std::complex<double> disk_beta() const;
  kernels::Su11 disk() const;

  /// Distance of the matrix to +I or -I in the max norm, whichever is closer.
  double identity_residual() const;

  friend bool approx_equal(const MoebiusTransform& m, const MoebiusTransform& n, double tol);

 private:
  MoebiusTransform(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}
  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
};

/// |trace| < 2 elliptic, > 2 hyperbolic; within 1e-9 of 2 parabolic, or
/// identity when the matrix is +-I to the same tolerance.
MoebiusKind classify_moebius(const MoebiusTransform& m);

enum class Stability { Attracting, Repelling, Neutral };

struct FixedPoint {
  CirclePoint point;
  Stability stability = Stability::Neutral;
};

/// Boundary fixed points from the disk-model fixed-point quadratic. One
/// neutral point for parabolic maps, an attracting/repelling pair for
/// hyperbolic ones. Throws NoFixedPointError for elliptic maps and the
/// identity (which has no isolated fixed points).
std::vector<FixedPoint> fixed_points(const MoebiusTransform& m);

struct Breakpoint {
  double x = 0.0;
  double y = 0.0;
};

using Angle = std::variant<Rational, double>;

double to_double(const Angle& a);

class GeneratorTable;

/// An orientation-preserving circle homeomorphism from one of the
/// representable families. Immutable value type.
class CircleHomeo {
 public:
  struct Moebius {
    MoebiusTransform matrix;
    // Cached lift data: the raw lift is t + (arg(alpha) + Arg(1 + ratio e^{-2 pi i t})) / pi.
    std::complex<double> ratio;
    double arg_alpha_over_pi = 0.0;
    std::complex<double> inv_ratio;
    double inv_arg_alpha_over_pi = 0.0;
    double shift = 0.0;
    double inv_shift = 0.0;
  };
  struct Rotation {
    Angle angle;
    double step = 0.0;  // angle reduced to [0, 1)
  };
  struct PiecewiseLinear {
    std::vector<Breakpoint> breaks;          // lift knots, x in [0, 1)
    std::vector<Breakpoint> inverse_breaks;  // knots of the inverse lift
    double shift = 0.0;
  };
  struct WordMap {
    std::shared_ptr<const GeneratorTable> table;
    Word word;
    double shift = 0.0;
  };
  using Variant = std::variant<Moebius, Rotation, PiecewiseLinear, WordMap>;

  CircleHomeo();  // identity rotation

  static CircleHomeo identity() { return {}; }
  static CircleHomeo moebius(const MoebiusTransform& m);
  static CircleHomeo rotation(const Rational& turns);
  static CircleHomeo rotation(double turns);
  /// Lift knots (x_i, y_i) with x strictly increasing in [0, 1), y strictly
  /// increasing and y_last < y_0 + 1; the lift is linear between knots and
  /// extended by F(x + 1) = F(x) + 1. Throws InputError otherwise.
  static CircleHomeo piecewise_linear(std::vector<Breakpoint> breaks);
  /// Throws UnknownGeneratorError for letters outside the table.
  static CircleHomeo word(std::shared_ptr<const GeneratorTable> table, Word w);

  /// Image of a point.
  CirclePoint operator()(CirclePoint p) const;
  /// Canonical lift: F(x + 1) = F(x) + 1 and F(0) in [0, 1).
  double lift(double x) const;
  /// Inverse function of the canonical lift.
  double lift_inverse(double y) const;

  CircleHomeo inverse() const;

  const Variant& variant() const { return v_; }
  const MoebiusTransform* as_moebius() const;
  const Angle* as_rotation() const;
  std::string kind_name() const;

  /// Pointwise identity on a 64-point grid (matrix +-I for Moebius maps).
  bool is_identity(double tol = 1e-9) const;

 private:
  explicit CircleHomeo(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Named generator images; the target of Word-variant homeomorphisms.
class GeneratorTable {
 public:
  GeneratorTable(std::string id, std::vector<std::string> names, std::vector<CircleHomeo> images);

  const std::string& id() const { return id_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<CircleHomeo>& images() const { return images_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::string id_;
  std::vector<std::string> names_;
  std::vector<CircleHomeo> images_;
};

CirclePoint evaluate(const CircleHomeo& f, CirclePoint p);

/// Batched evaluation on turn coordinates. Moebius maps go through the SIMD
/// disk-action kernel.
void evaluate_batch(const CircleHomeo& f, std::span<const double> turns, std::span<double> out);

/// f after g. Moebius/Moebius and Rotation/Rotation stay closed-form; words
/// over the same table concatenate; words over different tables throw
/// CompositionDomainError; any other mix becomes a two-letter word over a
/// fresh table.
CircleHomeo compose(const CircleHomeo& f, const CircleHomeo& g);
CircleHomeo inverse(const CircleHomeo& f);
CircleHomeo power(const CircleHomeo& f, int k);
/// h f h^-1
CircleHomeo conjugate(const CircleHomeo& h, const CircleHomeo& f);
/// Factor by which conjugating by h can amplify rounding errors: 1 for
/// rotations, the squared condition number (a^2 + b^2 + c^2 + d^2)^2 / 4 for
/// Moebius maps, the ratio of extreme slopes for piecewise-linear maps.
double distortion(const CircleHomeo& h);
/// Conjugate by the orientation-reversing involution t -> -t.
CircleHomeo flip_orientation(const CircleHomeo& f);

/// A chosen lift to R commuting with unit translation: the canonical lift of
/// `base` plus an integer offset.
class LiftedHomeo {
 public:
  explicit LiftedHomeo(CircleHomeo base, std::int64_t offset = 0)
      : base_(std::move(base)), offset_(offset) {}

  double operator()(double x) const { return base_.lift(x) + static_cast<double>(offset_); }
  double inverse_at(double y) const { return base_.lift_inverse(y - static_cast<double>(offset_)); }

  const CircleHomeo& base() const { return base_; }
  std::int64_t offset() const { return offset_; }
  LiftedHomeo shifted(std::int64_t k) const { return LiftedHomeo(base_, offset_ + k); }

 private:
  CircleHomeo base_;
  std::int64_t offset_ = 0;
};

LiftedHomeo canonical_lift(const CircleHomeo& f);
/// F after G, as a lift of compose(F.base, G.base).
LiftedHomeo compose(const LiftedHomeo& F, const LiftedHomeo& G);
LiftedHomeo inverse(const LiftedHomeo& F);

/// Inverts a strictly increasing function by bisection to `tol`.
/// Used for maps without closed-form inverses.
template <class F>
double invert_monotone(const F& f, double y, double lo, double hi, double tol = 1e-12) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < y) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace crig
