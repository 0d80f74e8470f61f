#include "hsrtm/curves.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hsrtm {

BoundaryCurve::BoundaryCurve(std::function<CurveSample(double)> param,
                             std::string descriptor)
    : param_(std::move(param)), descriptor_(std::move(descriptor)) {}

Point BoundaryCurve::normal(double t) const {
  const Point d1 = param_(t).d1;
  const double s = norm(d1);
  return {d1.x2 / s, -d1.x1 / s};
}

double BoundaryCurve::curvature(double t) const {
  const CurveSample c = param_(t);
  const double s = norm(c.d1);
  return (c.d1.x1 * c.d2.x2 - c.d1.x2 * c.d2.x1) / (s * s * s);
}

double BoundaryCurve::length() const {
  const int n = 2048;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += speed(2.0 * M_PI * i / n);
  return acc * 2.0 * M_PI / n;
}

double BoundaryCurve::min_depth() const {
  double m = 1e300;
  for (int i = 0; i < 1024; ++i)
    m = std::min(m, point(2.0 * M_PI * i / 1024).x2);
  return m;
}

void BoundaryCurve::validate() const {
  const CurveSample a = param_(0.0), b = param_(2.0 * M_PI);
  const double scale = std::max(1.0, norm(a.x));
  if (norm(a.x - b.x) > 1e-10 * scale || norm(a.d1 - b.d1) > 1e-8 * scale)
    throw std::invalid_argument("BoundaryCurve: not closed/derivative-periodic");
  if (!(min_depth() > 0.0))
    throw std::invalid_argument("BoundaryCurve: curve touches the surface x2=0");

  // segment-intersection scan at 512 samples
  const int n = 512;
  std::vector<Point> p(n);
  for (int i = 0; i < n; ++i) p[i] = point(2.0 * M_PI * i / n);
  auto seg_isect = [](Point a0, Point a1, Point b0, Point b1) {
    auto cross = [](Point u, Point v) { return u.x1 * v.x2 - u.x2 * v.x1; };
    const Point r = a1 - a0, s = b1 - b0;
    const double den = cross(r, s);
    if (std::abs(den) < 1e-300) return false;
    const double t = cross(b0 - a0, s) / den;
    const double u = cross(b0 - a0, r) / den;
    return t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the seam
      if (seg_isect(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n]))
        throw std::invalid_argument("BoundaryCurve: self-intersecting");
    }
  }
}

BoundaryCurve make_curve(const std::string& kind,
                         const std::vector<double>& params, Point center) {
  std::function<CurveSample(double)> f;
  std::ostringstream desc;
  if (kind == "circle") {
    const double rho = params.empty() ? 1.0 : params[0];
    if (!(rho > 0.0)) throw std::invalid_argument("make_curve: radius must be > 0");
    f = [rho, center](double t) {
      const double c = std::cos(t), s = std::sin(t);
      return CurveSample{{center.x1 + rho * c, center.x2 + rho * s},
                         {-rho * s, rho * c},
                         {-rho * c, -rho * s}};
    };
    desc << "circle r=" << rho;
  } else if (kind == "kite") {
    f = [center](double t) {
      const double c = std::cos(t), s = std::sin(t);
      const double c2 = std::cos(2.0 * t), s2 = std::sin(2.0 * t);
      return CurveSample{
          {center.x1 + c + 0.65 * c2 - 0.65, center.x2 + 1.5 * s},
          {-s - 1.3 * s2, 1.5 * c},
          {-c - 2.6 * c2, -1.5 * s}};
    };
    desc << "kite";
  } else if (kind == "leaf") {
    const int p = params.empty() ? 3 : static_cast<int>(params[0]);
    if (p < 1) throw std::invalid_argument("make_curve: leaf needs p >= 1");
    f = [p, center](double t) {
      const double r = 1.0 + 0.2 * std::cos(p * t);
      const double rp = -0.2 * p * std::sin(p * t);
      const double rpp = -0.2 * p * p * std::cos(p * t);
      const double c = std::cos(t), s = std::sin(t);
      return CurveSample{{center.x1 + r * c, center.x2 + r * s},
                         {rp * c - r * s, rp * s + r * c},
                         {(rpp - r) * c - 2.0 * rp * s,
                          (rpp - r) * s + 2.0 * rp * c}};
    };
    desc << p << "-leaf";
  } else if (kind == "peanut") {
    f = [center](double t) {
      const double c = std::cos(t), s = std::sin(t);
      const double c3 = std::cos(3.0 * t), s3 = std::sin(3.0 * t);
      return CurveSample{
          {center.x1 + c + 0.2 * c3, center.x2 + s + 0.2 * s3},
          {-s - 0.6 * s3, c + 0.6 * c3},
          {-c - 1.8 * c3, -s - 1.8 * s3}};
    };
    desc << "peanut";
  } else if (kind == "rounded_square") {
    // r(theta) = (cos^4 + sin^4)^{-1/4} = ((3 + cos 4t)/4)^{-1/4}
    f = [center](double t) {
      const double g = 0.25 * (3.0 + std::cos(4.0 * t));
      const double gp = -std::sin(4.0 * t);
      const double gpp = -4.0 * std::cos(4.0 * t);
      const double r = std::pow(g, -0.25);
      const double rp = -0.25 * std::pow(g, -1.25) * gp;
      const double rpp = (5.0 / 16.0) * std::pow(g, -2.25) * gp * gp -
                         0.25 * std::pow(g, -1.25) * gpp;
      const double c = std::cos(t), s = std::sin(t);
      return CurveSample{{center.x1 + r * c, center.x2 + r * s},
                         {rp * c - r * s, rp * s + r * c},
                         {(rpp - r) * c - 2.0 * rp * s,
                          (rpp - r) * s + 2.0 * rp * c}};
    };
    desc << "rounded square";
  } else {
    throw std::invalid_argument("make_curve: unknown kind '" + kind + "'");
  }
  desc << " at (" << center.x1 << "," << center.x2 << ")";
  BoundaryCurve curve(std::move(f), desc.str());
  curve.validate();
  return curve;
}

std::string to_string(BcKind bc) {
  switch (bc) {
    case BcKind::dirichlet: return "dirichlet";
    case BcKind::neumann: return "neumann";
    case BcKind::impedance: return "impedance";
  }
  return "?";
}

BcKind bc_from_string(const std::string& s) {
  if (s == "dirichlet") return BcKind::dirichlet;
  if (s == "neumann") return BcKind::neumann;
  if (s == "impedance") return BcKind::impedance;
  throw std::invalid_argument("unknown boundary condition '" + s + "'");
}

std::vector<double> SurveyGeometry::positions(int n) const {
  if (n < 1) throw std::invalid_argument("SurveyGeometry: need n >= 1");
  std::vector<double> p(n);
  if (n == 1) {
    p[0] = 0.0;
    return p;
  }
  for (int i = 0; i < n; ++i) p[i] = -d + 2.0 * d * i / (n - 1);
  return p;
}

}  // namespace hsrtm
