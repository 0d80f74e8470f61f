#include <cmath>

#include "doctest.h"
#include "hsrtm/fullspace.hpp"
#include "hsrtm/quadrature.hpp"
#include "hsrtm/spectral.hpp"

using namespace hsrtm;

namespace {
const ElasticMedium kMedium(0.5, 0.25, 2.0 * M_PI);

struct Setup {
  WaveNumbers wn = derive_wavenumbers(kMedium);
  Fullspace fs{kMedium, wn};
  SpectralCtx ctx{kMedium, wn};
};

// Inverse Fourier transform of the spectral full-space tensor (slow oracle).
// The integrand carries 1/mu_alpha branch singularities at +-kp, +-ks, so
// each band is mapped to fold them before the adaptive pass.
Tensor2C green_via_spectral(const Setup& s, Point x, Point y) {
  ToleranceSpec tol;
  tol.rel_tol = 1e-9;
  tol.abs_tol = 1e-13;
  tol.max_panels = 60000;
  const double dx2 = x.x2 - y.x2;
  const double kp = s.wn.kp, ks = s.wn.ks;
  const double xi_max = ks + std::max(10.0, -std::log(1e-13 / 10.0)) / std::abs(dx2);
  auto f = [&](double xi) {
    return std::exp(I * xi * (x.x1 - y.x1)) * ghat(s.ctx, xi, dx2);
  };
  Tensor2C total{};
  // |xi| < kp: xi = kp sin(theta)
  total += adaptive_integrate<Tensor2C>(
               [&](double th) { return kp * std::cos(th) * f(kp * std::sin(th)); },
               -M_PI / 2.0, M_PI / 2.0, tol)
               .value;
  // kp < |xi| < ks: cosine fold of both endpoints
  for (double sgn : {1.0, -1.0}) {
    const double c = 0.5 * (kp + ks), h = 0.5 * (ks - kp);
    total += adaptive_integrate<Tensor2C>(
                 [&](double ps) {
                   return h * std::sin(ps) * f(sgn * (c - h * std::cos(ps)));
                 },
                 0.0, M_PI, tol)
                 .value;
  }
  // |xi| > ks: xi = ks cosh(u)
  const double umax = std::acosh(xi_max / ks);
  for (double sgn : {1.0, -1.0}) {
    total += adaptive_integrate<Tensor2C>(
                 [&](double u) {
                   return ks * std::sinh(u) * f(sgn * ks * std::cosh(u));
                 },
                 0.0, umax, tol)
                 .value;
  }
  return (1.0 / (2.0 * M_PI)) * total;
}
}  // namespace

TEST_CASE("closed form matches the spectral representation") {
  Setup s;
  const Point y{0.0, 0.0};
  const Point x{std::sin(M_PI / 6.0), std::cos(M_PI / 6.0)};  // |x-y|=1, 30 deg
  const Tensor2C direct = s.fs.green(x, y);
  const Tensor2C viaft = green_via_spectral(s, x, y);
  CHECK(norm(direct - viaft) < 1e-6 * norm(direct));
}

TEST_CASE("symmetry G(x,y) = G(y,x)^T") {
  Setup s;
  const Point x{0.3, 1.7}, y{-1.1, 0.4};
  const Tensor2C a = s.fs.green(x, y);
  const Tensor2C b = transpose(s.fs.green(y, x));
  CHECK(norm(a - b) < 1e-14 * norm(a));
}

TEST_CASE("log singularity rate as r -> 0") {
  Setup s;
  const Point y{0.0, 0.0};
  auto normG = [&](double r) { return norm(s.fs.green({r, 0.0}, y)); };
  const double g3 = normG(1e-3), g4 = normG(1e-4), g5 = normG(1e-5);
  const double slope1 = (g4 - g3) / std::log(10.0);
  const double slope2 = (g5 - g4) / std::log(10.0);
  CHECK(slope1 == doctest::Approx(slope2).epsilon(0.02));
  CHECK(slope1 > 0.0);
}

TEST_CASE("gradient matches finite differences") {
  Setup s;
  const Point y{0.2, -0.5};
  const Point x{1.1, 0.6};
  auto [d1, d2] = s.fs.green_grad(x, y);
  const double h = 1e-6;
  const Tensor2C fd1 =
      (1.0 / (2.0 * h)) * (s.fs.green({x.x1 + h, x.x2}, y) - s.fs.green({x.x1 - h, x.x2}, y));
  const Tensor2C fd2 =
      (1.0 / (2.0 * h)) * (s.fs.green({x.x1, x.x2 + h}, y) - s.fs.green({x.x1, x.x2 - h}, y));
  CHECK(norm(d1 - fd1) < 1e-7 * norm(fd1));
  CHECK(norm(d2 - fd2) < 1e-7 * norm(fd2));
}

TEST_CASE("traction kernel matches stress assembled from the gradient") {
  Setup s;
  const Point y{0.0, 0.0};
  const Point x{0.9, 0.7};
  const Point n{0.6, 0.8};
  auto [d1, d2] = s.fs.green_grad(x, y);
  // column j: u = G e_j, sigma(u) n = lambda div(u) n + mu (grad u + grad u^T) n
  Tensor2C expect;
  for (int j = 0; j < 2; ++j) {
    const cd du1dx1 = (j == 0) ? d1.m11 : d1.m12;
    const cd du2dx1 = (j == 0) ? d1.m21 : d1.m22;
    const cd du1dx2 = (j == 0) ? d2.m11 : d2.m12;
    const cd du2dx2 = (j == 0) ? d2.m21 : d2.m22;
    const cd divu = du1dx1 + du2dx2;
    const cd t1 = kMedium.lambda * divu * n.x1 +
                  kMedium.mu * (2.0 * du1dx1 * n.x1 + (du1dx2 + du2dx1) * n.x2);
    const cd t2 = kMedium.lambda * divu * n.x2 +
                  kMedium.mu * ((du1dx2 + du2dx1) * n.x1 + 2.0 * du2dx2 * n.x2);
    if (j == 0) {
      expect.m11 = t1;
      expect.m21 = t2;
    } else {
      expect.m12 = t1;
      expect.m22 = t2;
    }
  }
  const Tensor2C got = s.fs.traction(x, n, y);
  CHECK(norm(got - expect) < 1e-12 * norm(expect));
}

TEST_CASE("scalar log splits: smooth parts approach the diagonal limits") {
  // Probe at moderate r; below ~1e-5 the direct Hankel evaluation cancels
  // catastrophically, which the quadrature never needs.
  Setup s;
  double prev = 1e9;
  for (double r : {1e-2, 1e-3, 1e-4}) {
    const cd asm_ = s.fs.a_of(r) - s.fs.a1_log(r) * std::log(r);
    const double err = std::abs(asm_ - s.fs.a_diag_limit());
    CHECK(err < prev / 5.0);  // O(r^2 log r)
    prev = err;
  }
  CHECK(prev < 1e-5 * std::abs(s.fs.a_diag_limit()));

  // b has no log on the diagonal; its smooth value tends to b_diag
  const cd b3 = s.fs.b_of(1e-3) - s.fs.b1_log(1e-3) * std::log(1e-3);
  const cd b4 = s.fs.b_of(1e-4) - s.fs.b1_log(1e-4) * std::log(1e-4);
  CHECK(std::abs(b4 - cd(s.fs.b_diag())) < std::abs(b3 - cd(s.fs.b_diag())) / 5.0);
  CHECK(std::abs(b4 - cd(s.fs.b_diag())) < 1e-4 * std::abs(b4));

  // series/direct crossover consistency for the even-analytic helpers
  const double r_lo = 0.02 / s.wn.ks * 0.99, r_hi = 0.02 / s.wn.ks * 1.01;
  CHECK(s.fs.l1_over_r(r_lo) == doctest::Approx(s.fs.l1_over_r(r_hi)).epsilon(1e-4));
  CHECK(s.fs.l2_over_r(r_lo) == doctest::Approx(s.fs.l2_over_r(r_hi)).epsilon(1e-4));
  CHECK(s.fs.l4_over_r(r_lo) == doctest::Approx(s.fs.l4_over_r(r_hi)).epsilon(1e-4));
}

TEST_CASE("spectral pieces: printed parity and special values") {
  Setup s;
  const double ks = s.wn.ks, kp = s.wn.kp;
  // Ghat at xi = 0 is diagonal with the printed entries
  const double dx2 = 0.8;
  const Tensor2C g0 = ghat(s.ctx, 0.0, dx2);
  const cd pre = I / (2.0 * s.ctx.omega2());
  CHECK(std::abs(g0.m11 - pre * ks * std::exp(I * ks * dx2)) < 1e-13 * norm(g0));
  CHECK(std::abs(g0.m22 - pre * kp * std::exp(I * kp * dx2)) < 1e-13 * norm(g0));
  CHECK(std::abs(g0.m12) + std::abs(g0.m21) < 1e-15);

  // xi -> -xi flips only the off-diagonal sign
  for (double xi : {0.37 * ks, 1.4 * ks}) {
    const Tensor2C gp = ghat(s.ctx, xi, dx2);
    const Tensor2C gm = ghat(s.ctx, -xi, dx2);
    CHECK(norm(gm - pconj(gp)) < 1e-13 * norm(gp));
  }

  // evanescent decay of entries at |xi| = 2 ks, |x2-y2| = 1
  const double xi2 = 2.0 * ks;
  const double bound = std::exp(-std::sqrt(xi2 * xi2 - ks * ks) * 1.0);
  const Tensor2C ge = ghat(s.ctx, xi2, 1.0);
  CHECK(norm(ge) < 10.0 * bound * xi2 * xi2 / (2.0 * s.wn.ks * s.wn.ks));

  // A_ss at xi = 0
  const Tensor2C ass = a_ss(s.ctx, 0.0);
  CHECK(std::abs(ass.m11 - cd(std::pow(ks, 4) * ks)) < 1e-9);
  CHECK(std::abs(ass.m12) + std::abs(ass.m21) + std::abs(ass.m22) < 1e-12);

  // N-hat(xi=0, y2)
  const double y2 = 1.3;
  const Tensor2C nh = nhat_surface(s.ctx, 0.0, y2);
  const cd n11 = I * std::exp(I * ks * y2) / (kMedium.mu * ks);
  const cd n22 = I * kp * std::exp(I * kp * y2) / (kMedium.mu * ks * ks);
  CHECK(std::abs(nh.m11 - n11) < 1e-13 * norm(nh));
  CHECK(std::abs(nh.m22 - n22) < 1e-13 * norm(nh));
  CHECK(std::abs(nh.m12) + std::abs(nh.m21) < 1e-15);

  // N-hat parity
  for (double xi : {0.3 * ks, 0.9 * ks, 1.3 * ks}) {
    const Tensor2C np_ = nhat_surface(s.ctx, xi, y2);
    const Tensor2C nm_ = nhat_surface(s.ctx, -xi, y2);
    CHECK(norm(nm_ - pconj(np_)) < 1e-12 * norm(np_));
  }

  // T-hat_D(0,0;y2) = diag(e^{i ks y2}, e^{i kp y2})
  const Tensor2C th = that_d(s.ctx, 0.0, y2);
  CHECK(std::abs(th.m11 - std::exp(I * ks * y2)) < 1e-13);
  CHECK(std::abs(th.m22 - std::exp(I * kp * y2)) < 1e-13);
  CHECK(std::abs(th.m12) + std::abs(th.m21) < 1e-15);

  // T-hat parity
  for (double xi : {0.45 * ks, 1.8 * ks}) {
    CHECK(norm(that_d(s.ctx, -xi, y2) - pconj(that_d(s.ctx, xi, y2))) <
          1e-12 * norm(that_d(s.ctx, xi, y2)));
  }

  // bulk reduces to the surface form at x2 -> 0 (prefactor consistency)
  for (double xi : {0.2 * ks, 0.7 * ks, 1.1 * ks, 1.02 * s.wn.kR}) {
    const Tensor2C bulk = nhat_bulk(s.ctx, xi, 1e-9, y2);
    const Tensor2C surf = nhat_surface(s.ctx, xi, y2);
    CHECK(norm(bulk - surf) < 1e-6 * norm(surf));
  }
}
