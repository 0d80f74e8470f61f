// Physical parameters of the half-space elastic medium and the derived
// wavenumbers, including the Rayleigh surface wavenumber k_R (real root of
// the Rayleigh function delta(xi) = beta(xi)^2 + 4 xi^2 mu_s mu_p).
#ifndef HSRTM_MEDIUM_HPP
#define HSRTM_MEDIUM_HPP

#include <stdexcept>

#include "hsrtm/tensor.hpp"

namespace hsrtm {

struct ElasticMedium {
  double lambda;
  double mu;
  double omega;
  double rho = 1.0;  // fixed, the wavenumber formulas below assume it

  ElasticMedium(double lambda_, double mu_, double omega_)
      : lambda(lambda_), mu(mu_), omega(omega_) {
    if (!(lambda > 0.0) || !(mu > 0.0) || !(omega > 0.0))
      throw std::invalid_argument("ElasticMedium: lambda, mu, omega must be > 0");
  }
};

struct WaveNumbers {
  double kp;     // compressional, omega / sqrt(lambda + 2 mu)
  double ks;     // shear, omega / sqrt(mu)
  double kappa;  // kp / ks, in (0, 1/sqrt(2)) for lambda > 0
  double kR;     // Rayleigh root, ks < kR
  double dR;     // half-gap (kR - ks) / 2
};

// Branch of sqrt with Im >= 0, cut along the positive real axis.  Rejects
// positive real input where the two one-sided limits disagree; callers that
// need the on-axis value use mu_alpha below, which encodes the limit from
// the upper half plane.
cd branch_sqrt(cd z);

// Vertical wavenumber mu_alpha(xi) = (k^2 - xi^2)^{1/2} on the real axis:
// +sqrt(k^2-xi^2) for |xi|<k, +i sqrt(xi^2-k^2) for |xi|>k.
inline cd mu_alpha(double xi, double k) {
  const double t = (k - xi) * (k + xi);
  if (t >= 0.0) return cd(std::sqrt(t), 0.0);
  return cd(0.0, std::sqrt(-t));
}
// Complex wavenumber variant (limiting absorption), k off the real axis.
inline cd mu_alpha(double xi, cd k) { return branch_sqrt(k * k - xi * xi); }

inline cd beta_fn(double xi, double ks) { return cd(ks * ks - 2.0 * xi * xi); }
inline cd beta_fn(double xi, cd ks) { return ks * ks - 2.0 * xi * xi; }

// Rayleigh function delta(xi) = beta^2 + 4 xi^2 mu_s mu_p; real for |xi|>=ks.
cd delta_fn(double xi, const WaveNumbers& wn);
// d delta / d xi, valid away from the branch points +-kp, +-ks.
cd delta_prime_fn(double xi, const WaveNumbers& wn);
// delta_1(xi) = delta(xi) / (xi^2 - kR^2), removable value at |xi| = kR.
// Domain restricted to the band kR - dR <= |xi| <= kR + dR.
cd delta_factor(double xi, const WaveNumbers& wn);
// gamma(xi) = xi^2 + mu_s mu_p (no real zeros).
cd gamma_fn(double xi, const WaveNumbers& wn);

// Root of f(t) = (2t-1)^2 - 4t sqrt(t-1) sqrt(t-kappa^2) on
// (1, (2-kappa^2)/(1-kappa^2)), by bisection plus one Newton polish on
// delta itself; returns kR.
double rayleigh_root(double ks, double kappa);

WaveNumbers derive_wavenumbers(const ElasticMedium& m);

}  // namespace hsrtm

#endif
