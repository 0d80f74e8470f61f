#include "hsrtm/fullspace.hpp"

#include <cmath>
#include <stdexcept>

namespace hsrtm {

namespace {

constexpr double kGammaE = 0.57721566490153286060651209;

cd hankel0(double x) { return cd(std::cyl_bessel_j(0, x), std::cyl_neumann(0, x)); }
cd hankel1(double x) { return cd(std::cyl_bessel_j(1, x), std::cyl_neumann(1, x)); }

// phi(k,r) = k J1(kr)/r, and phi'(k,r)/r, both even-analytic in r.
double phi_j1(double k, double r) {
  const double z = k * r;
  if (z < 0.02) {
    const double z2 = z * z;
    return k * k * 0.5 * (1.0 - z2 / 8.0 + z2 * z2 / 192.0);
  }
  return k * std::cyl_bessel_j(1, z) / r;
}

double phi_j1_prime_over_r(double k, double r) {
  const double z = k * r;
  if (z < 0.02) {
    const double k4 = k * k * k * k;
    const double z2 = z * z;
    return k4 * (-1.0 / 8.0 + z2 / 96.0 - z2 * z2 / 3072.0);
  }
  return k * (z * std::cyl_bessel_j(0, z) - 2.0 * std::cyl_bessel_j(1, z)) /
         (r * r * r);
}

cd l0_const(double k) {
  return cd(0.0, 0.25) - (std::log(0.5 * k) + kGammaE) / (2.0 * M_PI);
}

}  // namespace

Fullspace::Fullspace(const ElasticMedium& m, const WaveNumbers& wn)
    : lambda_(m.lambda),
      mu_(m.mu),
      om2_(m.omega * m.omega),
      ks_(wn.ks),
      kp_(wn.kp) {
  const double cstar = mu_ / (2.0 * M_PI * (lambda_ + 2.0 * mu_));
  c1_ = cstar;
  c2_ = -cstar;
  c4_ = -(lambda_ + mu_) / (M_PI * (lambda_ + 2.0 * mu_));
}

cd Fullspace::a_of(double r) const {
  const cd h0s = hankel0(ks_ * r);
  const cd h1d = ks_ * hankel1(ks_ * r) - kp_ * hankel1(kp_ * r);
  return cd(0.0, 0.25) / mu_ * h0s - cd(0.0, 0.25) / (om2_ * r) * h1d;
}

cd Fullspace::b_of(double r) const {
  const cd h0d = ks_ * ks_ * hankel0(ks_ * r) - kp_ * kp_ * hankel0(kp_ * r);
  const cd h1d = ks_ * hankel1(ks_ * r) - kp_ * hankel1(kp_ * r);
  return (-cd(0.0, 0.25) * h0d + cd(0.0, 0.5) / r * h1d) / om2_;
}

cd Fullspace::a_prime(double r) const {
  const cd h1s = hankel1(ks_ * r);
  const cd h1d = ks_ * hankel1(ks_ * r) - kp_ * hankel1(kp_ * r);
  const cd h0d = ks_ * ks_ * hankel0(ks_ * r) - kp_ * kp_ * hankel0(kp_ * r);
  const cd psi_p = cd(0.0, 0.5) / (r * r) * h1d - cd(0.0, 0.25) / r * h0d;
  return -cd(0.0, 0.25) * ks_ / mu_ * h1s + psi_p / om2_;
}

cd Fullspace::b_prime(double r) const {
  const cd h1c = ks_ * ks_ * ks_ * hankel1(ks_ * r) -
                 kp_ * kp_ * kp_ * hankel1(kp_ * r);
  const cd h1d = ks_ * hankel1(ks_ * r) - kp_ * hankel1(kp_ * r);
  const cd h0d = ks_ * ks_ * hankel0(ks_ * r) - kp_ * kp_ * hankel0(kp_ * r);
  return (cd(0.0, 0.25) * h1c - cd(0.0, 1.0) / (r * r) * h1d +
          cd(0.0, 0.5) / r * h0d) /
         om2_;
}

double Fullspace::a1_log(double r) const {
  const double j0s = std::cyl_bessel_j(0, ks_ * r);
  return -j0s / (2.0 * M_PI * mu_) +
         (phi_j1(ks_, r) - phi_j1(kp_, r)) / (2.0 * M_PI * om2_);
}

double Fullspace::b1_log(double r) const {
  const double j0d = ks_ * ks_ * std::cyl_bessel_j(0, ks_ * r) -
                     kp_ * kp_ * std::cyl_bessel_j(0, kp_ * r);
  return (0.5 * j0d - (phi_j1(ks_, r) - phi_j1(kp_, r))) / (M_PI * om2_);
}

double Fullspace::b1t_over_r2(double r) const {
  const double z = std::max(ks_, kp_) * r;
  if (z < 0.02) {
    const double k4d = ks_ * ks_ * ks_ * ks_ - kp_ * kp_ * kp_ * kp_;
    const double k6d = std::pow(ks_, 6) - std::pow(kp_, 6);
    return (-k4d / 16.0 + r * r * k6d / 192.0) / (M_PI * om2_);
  }
  return b1_log(r) / (r * r);
}

double Fullspace::b1t_prime_over_r(double r) const {
  const double z = std::max(ks_, kp_) * r;
  if (z < 0.02) {
    const double k4d = ks_ * ks_ * ks_ * ks_ - kp_ * kp_ * kp_ * kp_;
    const double k6d = std::pow(ks_, 6) - std::pow(kp_, 6);
    return (-k4d / 8.0 + r * r * k6d / 48.0) / (M_PI * om2_);
  }
  const double t1 = ks_ * ks_ * phi_j1(ks_, r) - kp_ * kp_ * phi_j1(kp_, r);
  const double t2 = phi_j1_prime_over_r(ks_, r) - phi_j1_prime_over_r(kp_, r);
  return -t1 / (2.0 * M_PI * om2_) - t2 / (M_PI * om2_);
}

double Fullspace::l1_over_r(double r) const {
  const double a1p_r = phi_j1(ks_, r) / (2.0 * M_PI * mu_) +
                       (phi_j1_prime_over_r(ks_, r) - phi_j1_prime_over_r(kp_, r)) /
                           (2.0 * M_PI * om2_);
  const double b1_r2 = b1t_over_r2(r);
  const double b1p_r = b1t_prime_over_r(r);
  return lambda_ * (a1p_r + b1p_r) + (lambda_ + 2.0 * mu_) * b1_r2;
}

double Fullspace::l2_over_r(double r) const {
  const double a1p_r = phi_j1(ks_, r) / (2.0 * M_PI * mu_) +
                       (phi_j1_prime_over_r(ks_, r) - phi_j1_prime_over_r(kp_, r)) /
                           (2.0 * M_PI * om2_);
  return mu_ * (a1p_r + b1t_over_r2(r));
}

double Fullspace::l4_over_r(double r) const {
  return 2.0 * mu_ * (b1t_prime_over_r(r) - 2.0 * b1t_over_r2(r));
}

cd Fullspace::a_diag_limit() const {
  const cd lw = -cd(0.0, 0.125) * (ks_ * ks_ - kp_ * kp_) +
                (ks_ * ks_ * std::log(0.5 * ks_) - kp_ * kp_ * std::log(0.5 * kp_)) /
                    (4.0 * M_PI) -
                (1.0 - 2.0 * kGammaE) * (ks_ * ks_ - kp_ * kp_) / (8.0 * M_PI);
  return l0_const(ks_) / mu_ + lw / om2_;
}

double Fullspace::b_diag() const {
  return (ks_ * ks_ - kp_ * kp_) / (4.0 * M_PI * om2_);
}

Tensor2C Fullspace::green(Point x, Point y) const {
  const Point rv = x - y;
  const double r = norm(rv);
  if (r == 0.0) throw std::domain_error("Fullspace::green: x == y");
  const Point rh{rv.x1 / r, rv.x2 / r};
  return a_of(r) * Tensor2C::identity() + b_of(r) * outer(rh, rh);
}

std::pair<Tensor2C, Tensor2C> Fullspace::green_grad(Point x, Point y) const {
  const Point rv = x - y;
  const double r = norm(rv);
  if (r == 0.0) throw std::domain_error("Fullspace::green_grad: x == y");
  const Point rh{rv.x1 / r, rv.x2 / r};
  const cd ap = a_prime(r), bp = b_prime(r), br = b_of(r) / r;
  auto dk = [&](int k) {
    const double rk = (k == 0) ? rh.x1 : rh.x2;
    Tensor2C g;
    // d_k G_ij = a' rk d_ij + b' rk ri rj + (b/r)(d_ik rj + ri d_jk - 2 ri rj rk)
    const double rr[2] = {rh.x1, rh.x2};
    cd* e[4] = {&g.m11, &g.m12, &g.m21, &g.m22};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        cd v = ap * rk * (i == j ? 1.0 : 0.0) + bp * rk * rr[i] * rr[j];
        v += br * ((i == k ? 1.0 : 0.0) * rr[j] + rr[i] * (j == k ? 1.0 : 0.0) -
                   2.0 * rr[i] * rr[j] * rk);
        *e[2 * i + j] = v;
      }
    return g;
  };
  return {dk(0), dk(1)};
}

Tensor2C Fullspace::traction(Point x, Point n, Point y) const {
  const Point rv = x - y;
  const double r = norm(rv);
  if (r == 0.0) throw std::domain_error("Fullspace::traction: x == y");
  const Point rh{rv.x1 / r, rv.x2 / r};
  const cd ap = a_prime(r), bp = b_prime(r), br = b_of(r) / r;
  const cd phi1 = lambda_ * (ap + bp) + (lambda_ + 2.0 * mu_) * br;
  const cd phi2 = mu_ * (ap + br);
  const cd phi4 = 2.0 * mu_ * (bp - 2.0 * br);
  const double ndr = dot(n, rh);
  return phi1 * outer(n, rh) + phi2 * (outer(rh, n) + ndr * Tensor2C::identity()) +
         phi4 * ndr * outer(rh, rh);
}

}  // namespace hsrtm
