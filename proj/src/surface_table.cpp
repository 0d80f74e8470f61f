#include "hsrtm/surface_table.hpp"

#include <cmath>

#include "hsrtm/quadrature.hpp"
#include "hsrtm/spectral.hpp"

namespace hsrtm {

namespace {
// One full oscillation of the fastest phase per panel; GK15 resolves that
// to ~1e-12.  Branch-point neighbourhoods shrink via the mu-phase rate.
std::function<double(double)> table_len_fn(const WaveNumbers& wn, double rate_delta,
                                           double depth) {
  return [=](double xi) {
    // The 1e-4 k floor keeps the sqrt-type mu-phase variation across the
    // panels nearest a branch point below ~0.1 rad at depth ~10.
    auto murate = [&](double k) {
      const double m = std::sqrt(std::abs(k * k - xi * xi));
      return std::abs(xi) / std::max(m, 1e-4 * k);
    };
    const double rate =
        rate_delta + 1.0 + depth * (murate(wn.ks) + murate(wn.kp));
    return 2.0 * M_PI / rate;
  };
}
}  // namespace

SurfaceTable::SurfaceTable(const Halfspace& hs, Kind kind, double y2,
                           double max_delta)
    : kind_(kind), y2_(y2), max_delta_(max_delta) {
  const WaveNumbers& wn = hs.wavenumbers();
  const ElasticMedium& m = hs.medium();
  SpectralCtx ctx(m, wn);
  kR_ = wn.kR;
  has_pole_ = (kind == Kind::neumann);

  // Truncation from the e^{-sqrt(xi^2-ks^2) y2} decay beyond ks.
  const double probe =
      (kind == Kind::neumann)
          ? norm(nhat_surface(ctx, 0.43 * wn.ks, y2))
          : norm(that_d(ctx, 0.43 * wn.ks, y2));
  AxisSpec sp;
  sp.decay_rate = y2;
  sp.decay_magnitude = 30.0 * (probe + 1.0) * (1.0 + wn.ks * wn.ks);
  sp.decay_start = wn.ks;
  ToleranceSpec tol = hs.tolerance();
  xi_max_ = std::max(truncation_limit(sp, tol), 1.25 * wn.kR);

  std::vector<double> splits{-wn.kR, -wn.ks, -wn.kp, 0.0, wn.kp, wn.ks, wn.kR};
  const std::vector<double> edges = build_panel_edges(
      -xi_max_, xi_max_, splits, table_len_fn(wn, max_delta, y2), 1e-7);

  // Per-alpha residues at +-kR (Neumann only).
  auto pieces_at = [&](double xi, cd denom) {
    const cd mp = ctx.mup(xi), ms = ctx.mus(xi);
    const cd ep = std::exp(I * mp * y2), es = std::exp(I * ms * y2);
    if (kind == Kind::neumann)
      return std::pair<Tensor2C, Tensor2C>{(ep / denom) * n_p(ctx, xi),
                                           (es / denom) * n_s(ctx, xi)};
    return std::pair<Tensor2C, Tensor2C>{ep * t_p(ctx, xi), es * t_s(ctx, xi)};
  };
  if (has_pole_) {
    auto [rp, rs] = pieces_at(kR_, ctx.delta_prime(kR_));
    rPp_ = rp;
    rPs_ = rs;
    auto [rp2, rs2] = pieces_at(-kR_, ctx.delta_prime(-kR_));
    rMp_ = rp2;
    rMs_ = rs2;
    mup_kR_ = ctx.mup(kR_);
    mus_kR_ = ctx.mus(kR_);
  }

  xi_.reserve((edges.size() - 1) * 15);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double c = 0.5 * (edges[i] + edges[i + 1]);
    const double h = 0.5 * (edges[i + 1] - edges[i]);
    for (int k = 0; k < 15; ++k) {
      const int idx = (k < 7) ? k : ((k < 14) ? k - 7 : 7);
      const double sgn = (k < 7) ? 1.0 : ((k < 14) ? -1.0 : 0.0);
      xi_.push_back(c + sgn * h * detail::kGK15Nodes[idx]);
      w_.push_back(h * detail::kGK15WK[idx]);
    }
  }
  const std::size_t n = xi_.size();
  fp_.resize(n);
  fs_.resize(n);
  mup_.resize(n);
  mus_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = xi_[k];
    const cd denom = (kind == Kind::neumann) ? ctx.delta(xi) : cd(1.0);
    auto [pp, ss] = pieces_at(xi, denom);
    fp_[k] = pp;
    fs_[k] = ss;
    mup_[k] = ctx.mup(xi);
    mus_[k] = ctx.mus(xi);
  }
}

Tensor2C SurfaceTable::value(double delta) const {
  Tensor2C acc;
  if (has_pole_) {
    const Tensor2C gP = rPp_ + rPs_, gM = rMp_ + rMs_;
    for (std::size_t k = 0; k < xi_.size(); ++k) {
      const cd ph = w_[k] * std::exp(I * delta * xi_[k]);
      Tensor2C v = fp_[k] + fs_[k];
      v -= (1.0 / (xi_[k] - kR_)) * gP + (1.0 / (xi_[k] + kR_)) * gM;
      acc += ph * v;
    }
    acc += pv_phase_integral(delta, -xi_max_, xi_max_, kR_) * gP;
    acc += pv_phase_integral(delta, -xi_max_, xi_max_, -kR_) * gM;
    acc = (1.0 / (2.0 * M_PI)) * acc;
    const cd eP = std::exp(I * delta * kR_), eM = std::exp(-I * delta * kR_);
    acc += (I * 0.5) * (eP * gP - eM * gM);
    return acc;
  }
  for (std::size_t k = 0; k < xi_.size(); ++k) {
    const cd ph = w_[k] * std::exp(I * delta * xi_[k]);
    acc += ph * (fp_[k] + fs_[k]);
  }
  return (1.0 / (2.0 * M_PI)) * acc;
}

TensorJet SurfaceTable::jet(double delta) const {
  TensorJet acc{};
  if (has_pole_) {
    const Tensor2C gP0 = rPp_ + rPs_, gM0 = rMp_ + rMs_;
    const Tensor2C gP1 = (I * kR_) * gP0, gM1 = (I * -kR_) * gM0;
    const Tensor2C gP2 = I * mup_kR_ * rPp_ + I * mus_kR_ * rPs_;
    const Tensor2C gM2 = I * mup_kR_ * rMp_ + I * mus_kR_ * rMs_;
    for (std::size_t k = 0; k < xi_.size(); ++k) {
      const double xi = xi_[k];
      const cd ph = w_[k] * std::exp(I * delta * xi);
      const cd sp = 1.0 / (xi - kR_), sm = 1.0 / (xi + kR_);
      const Tensor2C v0 = fp_[k] + fs_[k];
      acc[0] += ph * (v0 - sp * gP0 - sm * gM0);
      acc[1] += ph * ((I * xi) * v0 - sp * gP1 - sm * gM1);
      acc[2] += ph * (I * mup_[k] * fp_[k] + I * mus_[k] * fs_[k] - sp * gP2 -
                      sm * gM2);
    }
    const cd pvP = pv_phase_integral(delta, -xi_max_, xi_max_, kR_);
    const cd pvM = pv_phase_integral(delta, -xi_max_, xi_max_, -kR_);
    acc[0] += pvP * gP0 + pvM * gM0;
    acc[1] += pvP * gP1 + pvM * gM1;
    acc[2] += pvP * gP2 + pvM * gM2;
    for (int c = 0; c < 3; ++c) acc[c] = (1.0 / (2.0 * M_PI)) * acc[c];
    const cd eP = std::exp(I * delta * kR_), eM = std::exp(-I * delta * kR_);
    acc[0] += (I * 0.5) * (eP * gP0 - eM * gM0);
    acc[1] += (I * 0.5) * (eP * (I * kR_) * gP0 - eM * (-I * kR_) * gM0);
    acc[2] += (I * 0.5) * (eP * gP2 - eM * gM2);
    return acc;
  }
  for (std::size_t k = 0; k < xi_.size(); ++k) {
    const double xi = xi_[k];
    const cd ph = w_[k] * std::exp(I * delta * xi);
    const Tensor2C v0 = fp_[k] + fs_[k];
    acc[0] += ph * v0;
    acc[1] += ph * (I * xi) * v0;
    acc[2] += ph * (I * mup_[k] * fp_[k] + I * mus_[k] * fs_[k]);
  }
  for (int c = 0; c < 3; ++c) acc[c] = (1.0 / (2.0 * M_PI)) * acc[c];
  return acc;
}

}  // namespace hsrtm
