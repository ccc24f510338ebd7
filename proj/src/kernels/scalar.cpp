#include <cmath>
#include <limits>

#include "crig/kernels.hpp"

namespace crig::kernels::scalar {

void apply_su11(const Su11& m, UnitPoints in, UnitPointsOut out) {
  const std::size_t n = in.re.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double wr = in.re[i];
    const double wi = in.im[i];
    // alpha w + beta
    const double nr = m.alpha_re * wr - m.alpha_im * wi + m.beta_re;
    const double ni = m.alpha_re * wi + m.alpha_im * wr + m.beta_im;
    // conj(beta) w + conj(alpha)
    const double dr = m.beta_re * wr + m.beta_im * wi + m.alpha_re;
    const double di = m.beta_re * wi - m.beta_im * wr - m.alpha_im;
    // num / den = num * conj(den) / |den|^2; the modulus is 1 on the circle,
    // so normalizing num * conj(den) directly skips the division.
    const double qr = nr * dr + ni * di;
    const double qi = ni * dr - nr * di;
    const double inv = 1.0 / std::sqrt(qr * qr + qi * qi);
    out.re[i] = qr * inv;
    out.im[i] = qi * inv;
  }
}

void mat2_mul(Mat2Batch lhs, Mat2Batch rhs, Mat2BatchOut out) {
  const std::size_t n = lhs.a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double a = lhs.a[i] * rhs.a[i] + lhs.b[i] * rhs.c[i];
    const double b = lhs.a[i] * rhs.b[i] + lhs.b[i] * rhs.d[i];
    const double c = lhs.c[i] * rhs.a[i] + lhs.d[i] * rhs.c[i];
    const double d = lhs.c[i] * rhs.b[i] + lhs.d[i] * rhs.d[i];
    out.a[i] = a;
    out.b[i] = b;
    out.c[i] = c;
    out.d[i] = d;
  }
}

double min_abs_trace(Mat2Batch m) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m.a.size(); ++i) best = std::fmin(best, std::fabs(m.a[i] + m.d[i]));
  return best;
}

}  // namespace crig::kernels::scalar
