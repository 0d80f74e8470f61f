#include "hsrtm/medium.hpp"

#include <cmath>
#include <stdexcept>

namespace hsrtm {

cd branch_sqrt(cd z) {
  const double re = z.real(), im = z.imag();
  if (im == 0.0 && re >= 0.0)
    throw std::domain_error(
        "branch_sqrt: nonnegative real input is on the branch cut; use mu_alpha");
  const double a = std::abs(z);
  const double sgn = (im > 0.0) ? 1.0 : -1.0;
  return cd(sgn * std::sqrt(0.5 * (a + re)), std::sqrt(0.5 * (a - re)));
}

cd delta_fn(double xi, const WaveNumbers& wn) {
  const cd b = beta_fn(xi, wn.ks);
  return b * b + 4.0 * xi * xi * mu_alpha(xi, wn.ks) * mu_alpha(xi, wn.kp);
}

cd delta_prime_fn(double xi, const WaveNumbers& wn) {
  const cd b = beta_fn(xi, wn.ks);
  const cd ms = mu_alpha(xi, wn.ks), mp = mu_alpha(xi, wn.kp);
  // mu_alpha' = -xi / mu_alpha away from the branch points
  return -8.0 * xi * b + 8.0 * xi * ms * mp -
         4.0 * xi * xi * xi * (mp / ms + ms / mp);
}

cd delta_factor(double xi, const WaveNumbers& wn) {
  const double a = std::abs(xi);
  if (a < wn.kR - wn.dR || a > wn.kR + wn.dR)
    throw std::domain_error("delta_factor: |xi| outside [kR-dR, kR+dR]");
  const double denom = (xi - wn.kR) * (xi + wn.kR);
  if (std::abs(denom) < 1e-10 * wn.ks * wn.ks)
    return delta_prime_fn(a, wn) / (2.0 * wn.kR);
  return delta_fn(xi, wn) / denom;
}

cd gamma_fn(double xi, const WaveNumbers& wn) {
  return xi * xi + mu_alpha(xi, wn.ks) * mu_alpha(xi, wn.kp);
}

namespace {
double rayleigh_f(double t, double kappa2) {
  const double a = 2.0 * t - 1.0;
  return a * a - 4.0 * t * std::sqrt(t - 1.0) * std::sqrt(t - kappa2);
}
}  // namespace

double rayleigh_root(double ks, double kappa) {
  const double kappa2 = kappa * kappa;
  double lo = 1.0, hi = (2.0 - kappa2) / (1.0 - kappa2);
  if (!(rayleigh_f(lo, kappa2) > 0.0) || !(rayleigh_f(hi, kappa2) < 0.0))
    throw std::logic_error("rayleigh_root: bracket lost its sign change");
  // f is strictly decreasing on [1, hi] (f' <= -2), bisection is safe.
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (rayleigh_f(mid, kappa2) > 0.0 ? lo : hi) = mid;
  }
  double kR = ks * std::sqrt(0.5 * (lo + hi));

  // One Newton polish on delta itself (real-valued for xi > ks).
  WaveNumbers wn{kappa * ks, ks, kappa, kR, 0.0};
  const double d = delta_fn(kR, wn).real();
  const double dp = delta_prime_fn(kR, wn).real();
  if (dp != 0.0) kR -= d / dp;
  return kR;
}

WaveNumbers derive_wavenumbers(const ElasticMedium& m) {
  WaveNumbers wn;
  wn.kp = m.omega / std::sqrt(m.lambda + 2.0 * m.mu);
  wn.ks = m.omega / std::sqrt(m.mu);
  wn.kappa = wn.kp / wn.ks;
  wn.kR = rayleigh_root(wn.ks, wn.kappa);
  wn.dR = 0.5 * (wn.kR - wn.ks);

  const double resid = std::abs(delta_fn(wn.kR, wn)) / std::pow(wn.ks, 4);
  if (!(resid < 1e-10))
    throw std::logic_error("derive_wavenumbers: Rayleigh root residual too large");
  return wn;
}

}  // namespace hsrtm
