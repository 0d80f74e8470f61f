// Nystrom discretization of the boundary integral equations on the obstacle
// boundary, with the half-space Neumann tensor as the single-layer kernel:
//
//   Dirichlet:  first kind,  S phi = -N(.,xs) q
//   Neumann:    second kind, (-I/2 + K') phi = -sigma(N(.,xs) q) nu
//   impedance:  second kind, (-I/2 + K' + i eta S) phi = -(sigma + i eta N) q
//
// The kernel splits as N = G + (image + spectral correction); only G is
// singular on the curve.  Its log part uses the spectrally accurate
// periodic log-weighted rule, the Cauchy part of the traction kernel uses
// the odd-offset cotangent rule, everything smooth uses the trapezoid rule.
#ifndef HSRTM_NYSTROM_HPP
#define HSRTM_NYSTROM_HPP

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "hsrtm/curves.hpp"
#include "hsrtm/halfspace.hpp"
#include "hsrtm/surface_table.hpp"

namespace hsrtm {

// Periodic quadrature helpers (2n equispaced points t_j = j pi / n).
// Weights for int_0^{2pi} ln(4 sin^2((t - tau)/2)) f(tau) dtau at t.
std::vector<double> kress_log_weights(int n_pts, double t);
// Collocation-grid weights for the same rule, offset (i - j) mod n_pts.
std::vector<double> kress_log_weights_grid(int n_pts);
// p.v. int_0^{2pi} cot((tau - t_i)/2) f(tau) dtau: weight pi/n at odd
// offsets, with the cot factor; zero at even offsets.
std::vector<double> hilbert_weights_grid(int n_pts);

struct BoundaryNode {
  int curve = 0;       // obstacle index
  double t = 0.0;      // parameter
  Point x;             // position
  Point tangent;       // unit tangent
  Point normal;        // outward unit normal
  double speed = 0.0;  // |x'(t)|
  double w = 0.0;      // trapezoid weight in t (2pi / n_pts of its curve)
  double eta = 0.0;    // impedance coefficient
};

class NystromSystem {
 public:
  // points_per_curve: even counts, one entry per obstacle.
  NystromSystem(const Halfspace& hs, const std::vector<Obstacle>& obstacles,
                const std::vector<int>& points_per_curve, double max_offset);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<BoundaryNode>& nodes() const { return nodes_; }
  BcKind bc() const { return bc_; }
  double condition_estimate() const { return cond_; }

  // Right-hand side for a surface point source at (xs1, 0), polarization q.
  Eigen::VectorXcd rhs_for_source(double xs1, Vec2c q) const;
  Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;

  // Scattered field of the density at a receiver (xr1, 0) on the surface.
  Vec2c evaluate_surface(double xr1, const Eigen::VectorXcd& density) const;
  // ... and at a bulk point (validation).
  Vec2c evaluate_bulk(Point x, const Eigen::VectorXcd& density) const;

  // Dirichlet boundary-condition residual at the n off-collocation
  // midpoints, relative to the incident-trace magnitude.
  double boundary_residual(double xs1, Vec2c q,
                           const Eigen::VectorXcd& density) const;

  // Single-layer value of a density at parameter t on curve ci (midpoints
  // allowed); used by the residual check and tests.
  Vec2c single_layer_at(int ci, double t, const Eigen::VectorXcd& density) const;

  // Weighted surface kernel (w speed) N((xr1,0), y_j) for receiver rows.
  Tensor2C surface_kernel(int j, double xr1) const;

 private:
  void assemble_dirichlet(Eigen::MatrixXcd& a) const;
  void assemble_second_kind(Eigen::MatrixXcd& a) const;
  Tensor2C m1_log(const BoundaryNode& xi, const BoundaryNode& yj) const;
  Tensor2C m2_smooth(const BoundaryNode& xi, const BoundaryNode& yj) const;
  Tensor2C m2_diag(const BoundaryNode& xi) const;

  const Halfspace* hs_;
  std::vector<Obstacle> obstacles_;
  std::vector<int> npts_;
  std::vector<int> offsets_;  // node offset per curve
  std::vector<BoundaryNode> nodes_;
  BcKind bc_;
  // per-node depth tables for source/receiver coupling through the surface
  std::vector<std::unique_ptr<SurfaceTable>> tables_;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
  double cond_ = 0.0;
};

}  // namespace hsrtm

#endif
