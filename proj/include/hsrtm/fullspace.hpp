// Closed-form 2D elastodynamic fundamental tensor (outgoing Hankel form)
//   G(x,y) = a(r) I + b(r) rhat rhat^T,  r = |x-y|,
// together with its gradient, the traction kernel sigma(G(.,y)q) nu(x), and
// the scalar splittings a = a1(r) ln r + smooth, b = b1(r) ln r + smooth
// needed by the log-weighted Nystrom rules.  The Cauchy-singularity
// constants of the traction kernel are the elastostatic ones.
#ifndef HSRTM_FULLSPACE_HPP
#define HSRTM_FULLSPACE_HPP

#include "hsrtm/medium.hpp"
#include "hsrtm/tensor.hpp"

namespace hsrtm {

class Fullspace {
 public:
  Fullspace(const ElasticMedium& m, const WaveNumbers& wn);

  Tensor2C green(Point x, Point y) const;
  // d/dx_k of each column field; returns {d1 G, d2 G}.
  std::pair<Tensor2C, Tensor2C> green_grad(Point x, Point y) const;
  // Traction matrix: column j is sigma(G(.,y) e_j)(x) nu.
  Tensor2C traction(Point x, Point n, Point y) const;

  // Radial coefficients and their log splits (log coefficient functions are
  // analytic; values at r=0 are the analytic limits).
  cd a_of(double r) const;
  cd b_of(double r) const;
  cd a_prime(double r) const;
  cd b_prime(double r) const;
  double a1_log(double r) const;  // coefficient of ln r in a
  double b1_log(double r) const;  // coefficient of ln r in b
  // Even-analytic combinations entering the traction kernel's log part.
  double l1_over_r(double r) const;
  double l2_over_r(double r) const;
  double l4_over_r(double r) const;

  // Diagonal limits for the single-layer log quadrature:
  // lim_{r->0} (a(r) - a1_log(r) ln r) and b(0+).
  cd a_diag_limit() const;
  double b_diag() const;

  // Cauchy-singularity constants of the traction kernel:
  // K ~ [c1 n rvec^T + c2 rvec n^T] / r^2 + ...
  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double c4() const { return c4_; }

  double ks() const { return ks_; }
  double kp() const { return kp_; }

 private:
  double b1t_over_r2(double r) const;   // b1_log(r)/r^2, even-analytic
  double b1t_prime_over_r(double r) const;

  double lambda_, mu_, om2_, ks_, kp_;
  double c1_, c2_, c4_;
};

}  // namespace hsrtm

#endif
