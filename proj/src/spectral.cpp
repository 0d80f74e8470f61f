#include "hsrtm/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace hsrtm {

Tensor2C ghat_s(const SpectralCtx& c, double xi, double dx2) {
  if (dx2 == 0.0) throw std::domain_error("ghat_s: x2 == y2");
  const double sg = dx2 > 0.0 ? 1.0 : -1.0;
  const cd ms = c.mus(xi);
  const cd pre = I / (2.0 * c.omega2());
  const cd ph = std::exp(I * ms * std::abs(dx2));
  return pre * ph * Tensor2C{ms, -xi * sg, -xi * sg, xi * xi / ms};
}

Tensor2C ghat_p(const SpectralCtx& c, double xi, double dx2) {
  if (dx2 == 0.0) throw std::domain_error("ghat_p: x2 == y2");
  const double sg = dx2 > 0.0 ? 1.0 : -1.0;
  const cd mp = c.mup(xi);
  const cd pre = I / (2.0 * c.omega2());
  const cd ph = std::exp(I * mp * std::abs(dx2));
  return pre * ph * Tensor2C{xi * xi / mp, xi * sg, xi * sg, mp};
}

Tensor2C ghat(const SpectralCtx& c, double xi, double dx2) {
  return ghat_s(c, xi, dx2) + ghat_p(c, xi, dx2);
}

Tensor2C a_ss(const SpectralCtx& c, double xi) {
  const cd b = c.beta(xi), ms = c.mus(xi), mp = c.mup(xi);
  const double x2 = xi * xi;
  return {b * b * ms, -4.0 * xi * x2 * ms * mp, -xi * b * b, 4.0 * x2 * x2 * mp};
}

Tensor2C a_sp(const SpectralCtx& c, double xi) {
  const cd b = c.beta(xi), ms = c.mus(xi), mp = c.mup(xi);
  const double x2 = xi * xi;
  return {2.0 * x2 * b * ms, -2.0 * xi * b * ms * mp, -2.0 * xi * x2 * b,
          2.0 * x2 * b * mp};
}

Tensor2C a_ps(const SpectralCtx& c, double xi) {
  const cd b = c.beta(xi), ms = c.mus(xi), mp = c.mup(xi);
  const double x2 = xi * xi;
  return {2.0 * x2 * b * ms, 2.0 * xi * x2 * b, 2.0 * xi * b * ms * mp,
          2.0 * x2 * b * mp};
}

Tensor2C a_pp(const SpectralCtx& c, double xi) {
  const cd b = c.beta(xi), ms = c.mus(xi), mp = c.mup(xi);
  const double x2 = xi * xi;
  return {4.0 * x2 * x2 * ms, xi * b * b, 4.0 * xi * x2 * ms * mp, b * b * mp};
}

Tensor2C n_p(const SpectralCtx& c, double xi) {
  const cd b = c.beta(xi), ms = c.mus(xi), mp = c.mup(xi);
  const cd pre = I / c.mu;
  return pre * Tensor2C{2.0 * xi * xi * ms, -2.0 * xi * ms * mp, -xi * b, mp * b};
}

Tensor2C n_s(const SpectralCtx& c, double xi) {
  const cd b = c.beta(xi), ms = c.mus(xi), mp = c.mup(xi);
  const cd pre = I / c.mu;
  return pre * Tensor2C{ms * b, xi * b, 2.0 * xi * ms * mp, 2.0 * xi * xi * mp};
}

Tensor2C b_ss(const SpectralCtx& c, double xi) {
  const cd ms = c.mus(xi), mp = c.mup(xi);
  const double x2 = xi * xi;
  return {x2 * ms, -xi * ms * mp, -xi * x2, x2 * mp};
}

Tensor2C b_pp(const SpectralCtx& c, double xi) {
  const cd ms = c.mus(xi), mp = c.mup(xi);
  const double x2 = xi * xi;
  return {x2 * ms, xi * x2, xi * ms * mp, x2 * mp};
}

Tensor2C t_p(const SpectralCtx& c, double xi) {
  const cd ms = c.mus(xi), mp = c.mup(xi);
  const cd g = c.gamma(xi);
  return (1.0 / g) * Tensor2C{xi * xi, -xi * mp, -xi * ms, mp * ms};
}

Tensor2C t_s(const SpectralCtx& c, double xi) {
  const cd ms = c.mus(xi), mp = c.mup(xi);
  const cd g = c.gamma(xi);
  return (1.0 / g) * Tensor2C{ms * mp, xi * mp, xi * ms, xi * xi};
}

Tensor2C nhat_bulk(const SpectralCtx& c, double xi, double x2, double y2) {
  const cd ms = c.mus(xi), mp = c.mup(xi);
  const cd es = std::exp(I * ms * x2), ep = std::exp(I * mp * x2);
  const cd fs = std::exp(I * ms * y2), fp = std::exp(I * mp * y2);
  const cd pre = I / (c.omega2() * c.delta(xi));
  Tensor2C sum = es * fs * a_ss(c, xi) + es * fp * a_sp(c, xi) +
                 ep * fs * a_ps(c, xi) + ep * fp * a_pp(c, xi);
  return ghat(c, xi, x2 - y2) - ghat(c, xi, x2 + y2) + pre * sum;
}

Tensor2C nhat_surface(const SpectralCtx& c, double xi, double y2) {
  const cd fs = std::exp(I * c.mus(xi) * y2), fp = std::exp(I * c.mup(xi) * y2);
  return (1.0 / c.delta(xi)) * (fp * n_p(c, xi) + fs * n_s(c, xi));
}

Tensor2C that_d(const SpectralCtx& c, double xi, double y2) {
  const cd fs = std::exp(I * c.mus(xi) * y2), fp = std::exp(I * c.mup(xi) * y2);
  return fp * t_p(c, xi) + fs * t_s(c, xi);
}

}  // namespace hsrtm
