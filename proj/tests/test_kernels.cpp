#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "crig/kernels.hpp"

using namespace crig::kernels;

namespace {

struct BackendGuard {
  Backend saved = active_backend();
  ~BackendGuard() { set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar backend is always available") {
  BackendGuard guard;
  CHECK(backend_available(Backend::Scalar));
  CHECK(set_backend(Backend::Scalar));
  CHECK(active_backend() == Backend::Scalar);
  CHECK(backend_name(Backend::Scalar) == "scalar");
}

TEST_CASE("apply_su11 backends agree bit for bit") {
  if (!backend_available(Backend::Avx2)) return;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 1000u, 1003u}) {
    std::vector<double> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = u(rng) * 3.14159;
      re[i] = std::cos(t);
      im[i] = std::sin(t);
    }
    const Su11 m{1.3, 0.2, 0.5, -0.6};
    std::vector<double> sr(n), si(n), vr(n), vi(n);
    scalar::apply_su11(m, {re, im}, {sr, si});
    avx2::apply_su11(m, {re, im}, {vr, vi});
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(sr[i] == vr[i]);
      CHECK(si[i] == vi[i]);
      CHECK(std::hypot(sr[i], si[i]) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("mat2_mul and min_abs_trace backends agree") {
  if (!backend_available(Backend::Avx2)) return;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (std::size_t n : {1u, 2u, 4u, 7u, 8u, 9u, 513u}) {
    std::vector<double> la(n), lb(n), lc(n), ld(n), ra(n), rb(n), rc(n), rd(n);
    for (auto* v : {&la, &lb, &lc, &ld, &ra, &rb, &rc, &rd})
      for (auto& x : *v) x = u(rng);
    std::vector<double> sa(n), sb(n), sc(n), sd(n), va(n), vb(n), vc(n), vd(n);
    scalar::mat2_mul({la, lb, lc, ld}, {ra, rb, rc, rd}, {sa, sb, sc, sd});
    avx2::mat2_mul({la, lb, lc, ld}, {ra, rb, rc, rd}, {va, vb, vc, vd});
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(sa[i] == va[i]);
      CHECK(sb[i] == vb[i]);
      CHECK(sc[i] == vc[i]);
      CHECK(sd[i] == vd[i]);
      CHECK(sa[i] == doctest::Approx(la[i] * ra[i] + lb[i] * rc[i]));
    }
    CHECK(scalar::min_abs_trace({sa, sb, sc, sd}) == avx2::min_abs_trace({sa, sb, sc, sd}));
  }
  CHECK(std::isinf(scalar::min_abs_trace({})));
  CHECK(std::isinf(avx2::min_abs_trace({})));
}

TEST_CASE("dispatch follows the selected backend") {
  BackendGuard guard;
  for (Backend be : {Backend::Scalar, Backend::Avx2}) {
    if (!set_backend(be)) continue;
    std::vector<double> a{1, 2, 3, 4, 5}, b{0, 0, 0, 0, 0}, c{0, 0, 0, 0, 0}, d{-1, -2, 3, -4.5, -5};
    CHECK(min_abs_trace({a, b, c, d}) == doctest::Approx(0.0));
    // Aliasing output with input is allowed.
    mat2_mul({a, b, c, d}, {a, b, c, d}, {a, b, c, d});
    CHECK(a[1] == doctest::Approx(4.0));
    CHECK(d[3] == doctest::Approx(20.25));
  }
}
