// Spectral (horizontal-wavenumber) building blocks of the half-space elastic
// Green tensors: the full-space tensor G-hat, the Neumann image coefficients
// A_{alpha beta}, the surface-reduced Neumann pieces N_p/N_s, the Dirichlet
// coefficients B, and the surface traction pieces T_p/T_s of the Dirichlet
// tensor.  Wavenumbers may be complex (limiting absorption).
#ifndef HSRTM_SPECTRAL_HPP
#define HSRTM_SPECTRAL_HPP

#include "hsrtm/medium.hpp"
#include "hsrtm/tensor.hpp"

namespace hsrtm {

// Wavenumber context; eps > 0 scales ks, kp by (1 + i eps) and the omega^2
// prefactors follow as mu * ks^2.
struct SpectralCtx {
  cd ks, kp;
  double mu;
  double lambda;

  SpectralCtx(const ElasticMedium& m, const WaveNumbers& wn, double eps = 0.0)
      : ks(cd(wn.ks) * cd(1.0, eps)),
        kp(cd(wn.kp) * cd(1.0, eps)),
        mu(m.mu),
        lambda(m.lambda) {}

  cd omega2() const { return mu * ks * ks; }
  cd mus(double xi) const { return mu_of(xi, ks); }
  cd mup(double xi) const { return mu_of(xi, kp); }
  cd beta(double xi) const { return ks * ks - 2.0 * xi * xi; }
  cd delta(double xi) const {
    const cd b = beta(xi);
    return b * b + 4.0 * xi * xi * mus(xi) * mup(xi);
  }
  cd delta_prime(double xi) const {
    const cd b = beta(xi);
    const cd ms = mus(xi), mp = mup(xi);
    return -8.0 * xi * b + 8.0 * xi * ms * mp -
           4.0 * xi * xi * xi * (mp / ms + ms / mp);
  }
  cd gamma(double xi) const { return xi * xi + mus(xi) * mup(xi); }

 private:
  static cd mu_of(double xi, cd k) {
    if (k.imag() == 0.0) return mu_alpha(xi, k.real());
    return branch_sqrt(k * k - xi * xi);
  }
};

// Full-space spectral tensor, s and p parts; dx2 = x2 - y2 must be nonzero
// (the sign factor is discontinuous across the source level).
Tensor2C ghat_s(const SpectralCtx& c, double xi, double dx2);
Tensor2C ghat_p(const SpectralCtx& c, double xi, double dx2);
Tensor2C ghat(const SpectralCtx& c, double xi, double dx2);

// Neumann image coefficients; the first index pairs with exp(i mu_alpha x2),
// the second with exp(i mu_beta y2).
Tensor2C a_ss(const SpectralCtx& c, double xi);
Tensor2C a_sp(const SpectralCtx& c, double xi);
Tensor2C a_ps(const SpectralCtx& c, double xi);
Tensor2C a_pp(const SpectralCtx& c, double xi);

// Surface-reduced Neumann pieces (include the i/mu prefactor):
// N-hat(xi,0;y2) = (N_p e^{i mu_p y2} + N_s e^{i mu_s y2}) / delta(xi).
Tensor2C n_p(const SpectralCtx& c, double xi);
Tensor2C n_s(const SpectralCtx& c, double xi);

// Dirichlet coefficients (B_sp = -B_ss, B_ps = -B_pp).
Tensor2C b_ss(const SpectralCtx& c, double xi);
Tensor2C b_pp(const SpectralCtx& c, double xi);

// Surface traction pieces of the Dirichlet tensor (include the 1/gamma):
// T-hat_D(xi,0;y2) = T_p e^{i mu_p y2} + T_s e^{i mu_s y2}.
Tensor2C t_p(const SpectralCtx& c, double xi);
Tensor2C t_s(const SpectralCtx& c, double xi);

// Spectral Neumann tensor in the bulk (three-term sum) and its surface
// reduction; used directly by the slow reference evaluators and tests.
Tensor2C nhat_bulk(const SpectralCtx& c, double xi, double x2, double y2);
Tensor2C nhat_surface(const SpectralCtx& c, double xi, double y2);
Tensor2C that_d(const SpectralCtx& c, double xi, double y2);

}  // namespace hsrtm

#endif
