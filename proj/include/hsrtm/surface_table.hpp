// Fixed-rule spectral tables for the surface tensors.  For a fixed source
// depth y2 the surface Neumann tensor and the Dirichlet traction tensor are
// Fourier integrals of smooth spectral samples; the table freezes a
// composite Gauss-Kronrod rule once (panels sized for the largest requested
// horizontal offset, with Rayleigh poles subtracted per alpha-piece) and
// answers any |delta| <= max_delta by a weighted phase sum plus the closed
// form principal-value and residue-bracket terms.
#ifndef HSRTM_SURFACE_TABLE_HPP
#define HSRTM_SURFACE_TABLE_HPP

#include <vector>

#include "hsrtm/halfspace.hpp"

namespace hsrtm {

class SurfaceTable {
 public:
  enum class Kind { neumann, traction };

  SurfaceTable(const Halfspace& hs, Kind kind, double y2, double max_delta);

  Tensor2C value(double delta) const;
  // {value, d/d delta, d/d y2}
  TensorJet jet(double delta) const;

  double max_delta() const { return max_delta_; }
  double depth() const { return y2_; }
  std::size_t nodes() const { return xi_.size(); }

 private:
  Kind kind_;
  double y2_, max_delta_, kR_, xi_max_;
  bool has_pole_;
  std::vector<double> xi_, w_;
  std::vector<Tensor2C> fp_, fs_;     // per-alpha samples at the nodes
  std::vector<cd> mup_, mus_;         // vertical wavenumbers at the nodes
  Tensor2C rPp_, rPs_, rMp_, rMs_;    // per-alpha residues at +-kR
  cd mup_kR_, mus_kR_;
};

}  // namespace hsrtm

#endif
