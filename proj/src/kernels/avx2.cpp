// Compiled with -mavx2 (and deliberately without -mfma): every lane performs
// the same sequence of IEEE multiplies, adds, divides and square roots as the
// scalar reference, so the two backends agree bit for bit.

#include <cmath>
#include <limits>

#include <immintrin.h>

#include "crig/kernels.hpp"

namespace crig::kernels::avx2 {

void apply_su11(const Su11& m, UnitPoints in, UnitPointsOut out) {
  const std::size_t n = in.re.size();
  const __m256d ar = _mm256_set1_pd(m.alpha_re);
  const __m256d ai = _mm256_set1_pd(m.alpha_im);
  const __m256d br = _mm256_set1_pd(m.beta_re);
  const __m256d bi = _mm256_set1_pd(m.beta_im);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wr = _mm256_loadu_pd(in.re.data() + i);
    const __m256d wi = _mm256_loadu_pd(in.im.data() + i);
    const __m256d nr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(ar, wr), _mm256_mul_pd(ai, wi)), br);
    const __m256d ni = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ar, wi), _mm256_mul_pd(ai, wr)), bi);
    const __m256d dr = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(br, wr), _mm256_mul_pd(bi, wi)), ar);
    const __m256d di = _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(br, wi), _mm256_mul_pd(bi, wr)), ai);
    const __m256d qr = _mm256_add_pd(_mm256_mul_pd(nr, dr), _mm256_mul_pd(ni, di));
    const __m256d qi = _mm256_sub_pd(_mm256_mul_pd(ni, dr), _mm256_mul_pd(nr, di));
    const __m256d norm = _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(qr, qr), _mm256_mul_pd(qi, qi)));
    const __m256d inv = _mm256_div_pd(one, norm);
    _mm256_storeu_pd(out.re.data() + i, _mm256_mul_pd(qr, inv));
    _mm256_storeu_pd(out.im.data() + i, _mm256_mul_pd(qi, inv));
  }
  if (i < n) {
    scalar::apply_su11(m, {in.re.subspan(i), in.im.subspan(i)}, {out.re.subspan(i), out.im.subspan(i)});
  }
}

void mat2_mul(Mat2Batch lhs, Mat2Batch rhs, Mat2BatchOut out) {
  const std::size_t n = lhs.a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d la = _mm256_loadu_pd(lhs.a.data() + i);
    const __m256d lb = _mm256_loadu_pd(lhs.b.data() + i);
    const __m256d lc = _mm256_loadu_pd(lhs.c.data() + i);
    const __m256d ld = _mm256_loadu_pd(lhs.d.data() + i);
    const __m256d ra = _mm256_loadu_pd(rhs.a.data() + i);
    const __m256d rb = _mm256_loadu_pd(rhs.b.data() + i);
    const __m256d rc = _mm256_loadu_pd(rhs.c.data() + i);
    const __m256d rd = _mm256_loadu_pd(rhs.d.data() + i);
    const __m256d a = _mm256_add_pd(_mm256_mul_pd(la, ra), _mm256_mul_pd(lb, rc));
    const __m256d b = _mm256_add_pd(_mm256_mul_pd(la, rb), _mm256_mul_pd(lb, rd));
    const __m256d c = _mm256_add_pd(_mm256_mul_pd(lc, ra), _mm256_mul_pd(ld, rc));
    const __m256d d = _mm256_add_pd(_mm256_mul_pd(lc, rb), _mm256_mul_pd(ld, rd));
    _mm256_storeu_pd(out.a.data() + i, a);
    _mm256_storeu_pd(out.b.data() + i, b);
    _mm256_storeu_pd(out.c.data() + i, c);
    _mm256_storeu_pd(out.d.data() + i, d);
  }
  if (i < n) {
    scalar::mat2_mul({lhs.a.subspan(i), lhs.b.subspan(i), lhs.c.subspan(i), lhs.d.subspan(i)},
                     {rhs.a.subspan(i), rhs.b.subspan(i), rhs.c.subspan(i), rhs.d.subspan(i)},
                     {out.a.subspan(i), out.b.subspan(i), out.c.subspan(i), out.d.subspan(i)});
  }
}

double min_abs_trace(Mat2Batch m) {
  const std::size_t n = m.a.size();
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_add_pd(_mm256_loadu_pd(m.a.data() + i), _mm256_loadu_pd(m.d.data() + i));
    best = _mm256_min_pd(best, _mm256_andnot_pd(sign_mask, t));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double result = std::fmin(std::fmin(lanes[0], lanes[1]), std::fmin(lanes[2], lanes[3]));
  if (i < n) {
    result = std::fmin(result, scalar::min_abs_trace({m.a.subspan(i), m.b.subspan(i), m.c.subspan(i), m.d.subspan(i)}));
  }
  return result;
}

}  // namespace crig::kernels::avx2
