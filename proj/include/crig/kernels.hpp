#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and,
// on x86-64, an AVX2 version; the active backend is chosen once at startup
// from CPUID and may be overridden (tests force each backend in turn).

#include <cstddef>
#include <span>
#include <string_view>

namespace crig::kernels {

enum class Backend { Scalar, Avx2 };

Backend active_backend();
/// Forces a backend. Returns false (and changes nothing) when the requested
/// backend was not compiled in or the CPU lacks it.
bool set_backend(Backend b);
bool backend_available(Backend b);
std::string_view backend_name(Backend b);

/// An SU(1,1) matrix (alpha beta; conj(beta) conj(alpha)) acting on the unit
/// circle by w -> (alpha w + beta) / (conj(beta) w + conj(alpha)).
struct Su11 {
  double alpha_re = 1.0, alpha_im = 0.0;
  double beta_re = 0.0, beta_im = 0.0;
};

/// Unit complex numbers in structure-of-arrays layout.
struct UnitPoints {
  std::span<const double> re;
  std::span<const double> im;
};
struct UnitPointsOut {
  std::span<double> re;
  std::span<double> im;
};

/// out = m . in, renormalized to the unit circle. All spans equal length;
/// in and out may alias.
void apply_su11(const Su11& m, UnitPoints in, UnitPointsOut out);

/// Structure-of-arrays batch of real 2x2 matrices (a b; c d).
struct Mat2Batch {
  std::span<const double> a, b, c, d;
};
struct Mat2BatchOut {
  std::span<double> a, b, c, d;
};

/// out[i] = lhs[i] * rhs[i]. out may alias lhs or rhs.
void mat2_mul(Mat2Batch lhs, Mat2Batch rhs, Mat2BatchOut out);

/// Smallest |a + d| over the batch; +inf for an empty batch.
double min_abs_trace(Mat2Batch m);

namespace scalar {
void apply_su11(const Su11& m, UnitPoints in, UnitPointsOut out);
void mat2_mul(Mat2Batch lhs, Mat2Batch rhs, Mat2BatchOut out);
double min_abs_trace(Mat2Batch m);
}  // namespace scalar

namespace avx2 {
void apply_su11(const Su11& m, UnitPoints in, UnitPointsOut out);
void mat2_mul(Mat2Batch lhs, Mat2Batch rhs, Mat2BatchOut out);
double min_abs_trace(Mat2Batch m);
}  // namespace avx2

}  // namespace crig::kernels
