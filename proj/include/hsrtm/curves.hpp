// Smooth closed boundary curves for the scattering obstacles, given by
// analytic parametrizations over [0, 2pi) with first and second
// derivatives; plus the obstacle (curve + boundary condition) and the
// source/receiver survey geometry.
#ifndef HSRTM_CURVES_HPP
#define HSRTM_CURVES_HPP

#include <functional>
#include <string>
#include <vector>

#include "hsrtm/tensor.hpp"

namespace hsrtm {

struct CurveSample {
  Point x;   // position
  Point d1;  // dx/dtheta
  Point d2;  // d2x/dtheta2
};

class BoundaryCurve {
 public:
  BoundaryCurve(std::function<CurveSample(double)> param, std::string descriptor);

  CurveSample at(double t) const { return param_(t); }
  Point point(double t) const { return param_(t).x; }
  double speed(double t) const { return norm(param_(t).d1); }
  // outward unit normal for counterclockwise parametrizations
  Point normal(double t) const;
  double curvature(double t) const;
  double length() const;     // arc length (numeric)
  double min_depth() const;  // min x2 over the curve
  const std::string& descriptor() const { return descriptor_; }

  // closedness, positive depth, simplicity (512-sample segment scan)
  void validate() const;

 private:
  std::function<CurveSample(double)> param_;
  std::string descriptor_;
};

// kinds: circle (radius), kite, leaf (p, amplitude 0.2), peanut,
// rounded_square; all translated by center.
BoundaryCurve make_curve(const std::string& kind,
                         const std::vector<double>& params, Point center);

enum class BcKind { dirichlet, neumann, impedance };

std::string to_string(BcKind bc);
BcKind bc_from_string(const std::string& s);

struct Obstacle {
  BoundaryCurve curve;
  BcKind bc = BcKind::dirichlet;
  // impedance coefficient sampled along the curve (>= 0); ignored otherwise
  std::function<double(double)> eta = [](double) { return 0.0; };
};

struct SurveyGeometry {
  double d = 50.0;
  int n_src = 1;
  int n_rcv = 1;

  std::vector<double> source_positions() const { return positions(n_src); }
  std::vector<double> receiver_positions() const { return positions(n_rcv); }

 private:
  std::vector<double> positions(int n) const;
};

}  // namespace hsrtm

#endif
