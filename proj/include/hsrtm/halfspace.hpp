// Half-space elastic Green tensors with the traction-free surface condition:
//
//  * surface Neumann tensor N(x,y), x on Gamma_0: principal-value Fourier
//    inversion of (N_p e^{i mu_p y2} + N_s e^{i mu_s y2})/delta with the
//    Rayleigh poles +-kR subtracted analytically plus the residue bracket;
//  * bulk Neumann tensor N(x,y) = G(x,y) - G(x,y') + C(x,y) with the image
//    correction C evaluated the same way from the A_{alpha beta} sum;
//  * surface traction tensor T_D(x,z) of the Dirichlet tensor (no poles);
//  * the limiting-absorption evaluator N_eps (complex wavenumbers, plain
//    adaptive inversion) used as the convergence oracle;
//  * x-gradients of all of the above for stress/traction assembly.
#ifndef HSRTM_HALFSPACE_HPP
#define HSRTM_HALFSPACE_HPP

#include <array>

#include "hsrtm/fullspace.hpp"
#include "hsrtm/medium.hpp"
#include "hsrtm/quadrature.hpp"
#include "hsrtm/spectral.hpp"

namespace hsrtm {

// Value (index 0) and the d/d x1, d/d x2 derivatives (1, 2) of a tensor
// field with respect to the observation point.
using TensorJet = std::array<Tensor2C, 3>;

inline TensorJet operator+(const TensorJet& a, const TensorJet& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline TensorJet operator-(const TensorJet& a, const TensorJet& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline TensorJet& operator+=(TensorJet& a, const TensorJet& b) {
  a = a + b;
  return a;
}
inline TensorJet operator*(cd s, const TensorJet& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
inline TensorJet operator*(double s, const TensorJet& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
inline double quad_norm(const TensorJet& a) {
  return std::max(norm(a[0]), std::max(norm(a[1]), norm(a[2])));
}

// Traction sigma(u) nu assembled from a value/gradient jet of a tensor
// field (column j of the jet = field for polarization e_j).
Tensor2C traction_of_jet(const TensorJet& jet, Point nu, double lambda,
                         double mu);

class Halfspace {
 public:
  explicit Halfspace(const ElasticMedium& m, ToleranceSpec tol = {});

  const ElasticMedium& medium() const { return medium_; }
  const WaveNumbers& wavenumbers() const { return wn_; }
  const Fullspace& fullspace() const { return fs_; }
  const ToleranceSpec& tolerance() const { return tol_; }

  // ---- surface forms (first argument on Gamma_0) ----
  // N(x,y) for x=(x1,0), y=(y1,y2), delta = x1-y1, y2 > 0.
  Tensor2C neumann_surface(double delta, double y2) const;
  // {value, d/d delta, d/d y2}.
  TensorJet neumann_surface_jet(double delta, double y2) const;
  // T_D(x,z) for x=(x1,0), z=(z1,z2), delta = x1-z1, z2 > 0.
  Tensor2C traction_dirichlet(double delta, double z2) const;
  TensorJet traction_dirichlet_jet(double delta, double z2) const;

  // ---- bulk forms (both arguments in the upper half plane) ----
  Tensor2C neumann_bulk(Point x, Point y) const;
  // {N, d/dx1 N, d/dx2 N}.
  TensorJet neumann_bulk_jet(Point x, Point y) const;
  // Traction matrix: column j = sigma(N(.,y) e_j)(x) nu.
  Tensor2C neumann_stress(Point x, Point nu, Point y) const;
  // Traction of the first argument of the *surface-source* tensor N(x, xs),
  // xs on Gamma_0 (obtained from the surface form by reciprocity).
  Tensor2C neumann_stress_surface_source(Point x, Point nu, double xs1) const;

  // Image + spectral correction kernel: N - G; smooth for y2 > 0.
  Tensor2C remainder(Point x, Point y) const;
  TensorJet remainder_jet(Point x, Point y) const;
  // Traction of the remainder field at x (column j = polarization e_j).
  Tensor2C remainder_stress(Point x, Point nu, Point y) const;

  // Limiting absorption principle with complex frequency omega(1+i eps).
  Tensor2C neumann_bulk_eps(Point x, Point y, double eps) const;

  // Spectral correction C(x,y) alone (the A_{alpha beta} term).
  Tensor2C correction(Point x, Point y) const;
  TensorJet correction_jet(Point x, Point y) const;

  // Residue matrices at +-kR for the surface Neumann integrand
  // (N_p e^{i mu_p y2} + N_s e^{i mu_s y2})/delta'(kR); used by the residue
  // bracket, the pole subtraction and the decay diagnostics.
  std::pair<Tensor2C, Tensor2C> surface_residues(double y2) const;
  // The printed residue bracket of the surface representation.
  Tensor2C surface_residue_bracket(double delta, double y2) const;

 private:
  ElasticMedium medium_;
  WaveNumbers wn_;
  SpectralCtx ctx_;
  Fullspace fs_;
  ToleranceSpec tol_;
};

}  // namespace hsrtm

#endif
