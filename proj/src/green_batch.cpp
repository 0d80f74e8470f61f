#include "hsrtm/green_batch.hpp"

#include <cmath>
#include <stdexcept>

#include "hsrtm/quadrature.hpp"
#include "hsrtm/spectral.hpp"

namespace hsrtm {

namespace {

// Shared fixed-grid data for one (xs, ys) pair family.
struct BatchGrid {
  std::vector<double> xi, w;
  // A_{alpha beta}(xi)/delta(xi) kernels at the nodes
  std::vector<Tensor2C> kss, ksp, kps, kpp;
  std::vector<cd> mus, mup;
  // residue kernels at +-kR: A_{alpha beta}(+-kR)/delta'(+-kR)
  Tensor2C rss[2], rsp[2], rps[2], rpp[2];
  cd mus_kr, mup_kr;
  double kR = 0, xi_max = 0;
  cd pre;  // i/omega^2
};

BatchGrid build_grid(const Halfspace& hs, const std::vector<Point>& xs,
                     const std::vector<Point>& ys) {
  const WaveNumbers& wn = hs.wavenumbers();
  SpectralCtx ctx(hs.medium(), wn);
  double max_dx = 0.0, depth_min = 1e300, depth_max = 0.0;
  for (const Point& x : xs)
    for (const Point& y : ys) {
      max_dx = std::max(max_dx, std::abs(x.x1 - y.x1));
      depth_min = std::min(depth_min, x.x2 + y.x2);
      depth_max = std::max(depth_max, x.x2 + y.x2);
    }
  if (!(depth_min > 0.0))
    throw std::domain_error("neumann batch: needs x2 + y2 > 0");

  BatchGrid g;
  g.kR = wn.kR;
  g.pre = I / ctx.omega2();
  AxisSpec sp;
  sp.decay_rate = depth_min;
  sp.decay_magnitude = 1e4;
  sp.decay_start = wn.ks;
  ToleranceSpec tol = hs.tolerance();
  g.xi_max = std::max(truncation_limit(sp, tol), 1.25 * wn.kR);

  auto len = [&](double xi) {
    auto murate = [&](double k) {
      const double m = std::sqrt(std::abs(k * k - xi * xi));
      return std::abs(xi) / std::max(m, 1e-4 * k);
    };
    const double rate =
        max_dx + 1.0 + depth_max * (murate(wn.ks) + murate(wn.kp));
    return 2.0 * M_PI / rate;
  };
  const std::vector<double> edges = build_panel_edges(
      -g.xi_max, g.xi_max,
      {-wn.kR, -wn.ks, -wn.kp, 0.0, wn.kp, wn.ks, wn.kR}, len, 1e-7);

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double c = 0.5 * (edges[i] + edges[i + 1]);
    const double h = 0.5 * (edges[i + 1] - edges[i]);
    for (int k = 0; k < 15; ++k) {
      const int idx = (k < 7) ? k : ((k < 14) ? k - 7 : 7);
      const double sgn = (k < 7) ? 1.0 : ((k < 14) ? -1.0 : 0.0);
      g.xi.push_back(c + sgn * h * detail::kGK15Nodes[idx]);
      g.w.push_back(h * detail::kGK15WK[idx]);
    }
  }
  const std::size_t n = g.xi.size();
  g.kss.resize(n);
  g.ksp.resize(n);
  g.kps.resize(n);
  g.kpp.resize(n);
  g.mus.resize(n);
  g.mup.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = g.xi[k];
    const cd dinv = 1.0 / ctx.delta(xi);
    g.kss[k] = dinv * a_ss(ctx, xi);
    g.ksp[k] = dinv * a_sp(ctx, xi);
    g.kps[k] = dinv * a_ps(ctx, xi);
    g.kpp[k] = dinv * a_pp(ctx, xi);
    g.mus[k] = ctx.mus(xi);
    g.mup[k] = ctx.mup(xi);
  }
  for (int s = 0; s < 2; ++s) {
    const double xi = (s == 0) ? wn.kR : -wn.kR;
    const cd dpinv = 1.0 / ctx.delta_prime(xi);
    g.rss[s] = dpinv * a_ss(ctx, xi);
    g.rsp[s] = dpinv * a_sp(ctx, xi);
    g.rps[s] = dpinv * a_ps(ctx, xi);
    g.rpp[s] = dpinv * a_pp(ctx, xi);
  }
  g.mus_kr = ctx.mus(wn.kR);
  g.mup_kr = ctx.mup(wn.kR);
  return g;
}

template <bool WantJet>
void run_batch(const Halfspace& hs, const std::vector<Point>& xs,
               const std::vector<Point>& ys, bool include_direct,
               std::vector<Tensor2C>* vals, std::vector<TensorJet>* jets) {
  const BatchGrid g = build_grid(hs, xs, ys);
  const std::size_t k_n = g.xi.size();
  const std::size_t nx = xs.size(), ny = ys.size();

  // per-x and per-y exponential factors (phases folded in; weights on the
  // y side); px/pyw kept separately for the pole-subtraction sums
  std::vector<cd> us(nx * k_n), up(nx * k_n), vs(ny * k_n), vp(ny * k_n);
  std::vector<cd> px(nx * k_n), pyw(ny * k_n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < static_cast<int>(nx); ++i)
    for (std::size_t k = 0; k < k_n; ++k) {
      const cd phase = std::exp(I * g.xi[k] * xs[i].x1);
      px[i * k_n + k] = phase;
      us[i * k_n + k] = std::exp(I * g.mus[k] * xs[i].x2) * phase;
      up[i * k_n + k] = std::exp(I * g.mup[k] * xs[i].x2) * phase;
    }
#pragma omp parallel for schedule(static)
  for (int j = 0; j < static_cast<int>(ny); ++j)
    for (std::size_t k = 0; k < k_n; ++k) {
      const cd phase = std::exp(-I * g.xi[k] * ys[j].x1);
      pyw[j * k_n + k] = g.w[k] * phase;
      vs[j * k_n + k] = g.w[k] * std::exp(I * g.mus[k] * ys[j].x2) * phase;
      vp[j * k_n + k] = g.w[k] * std::exp(I * g.mup[k] * ys[j].x2) * phase;
    }

  const Fullspace& fs = hs.fullspace();
  const double inv2pi = 1.0 / (2.0 * M_PI);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(nx); ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const Point x = xs[i];
      const Point y = ys[j];
      const double delta = x.x1 - y.x1;

      // residues of the correction integrand at +-kR (value and jet forms)
      auto residue = [&](int s) {
        const double sgn_kr = (s == 0) ? g.kR : -g.kR;
        const cd exs = std::exp(I * g.mus_kr * x.x2);
        const cd exp_ = std::exp(I * g.mup_kr * x.x2);
        const cd eys = std::exp(I * g.mus_kr * y.x2);
        const cd eyp = std::exp(I * g.mup_kr * y.x2);
        TensorJet r{};
        const Tensor2C srow = exs * (eys * g.rss[s] + eyp * g.rsp[s]);
        const Tensor2C prow = exp_ * (eys * g.rps[s] + eyp * g.rpp[s]);
        r[0] = g.pre * (srow + prow);
        r[1] = (I * sgn_kr) * r[0];
        r[2] = g.pre * (I * g.mus_kr * srow + I * g.mup_kr * prow);
        return r;
      };
      const TensorJet gP = residue(0), gM = residue(1);

      TensorJet acc{};
      cd sub_p_sum{}, sub_m_sum{};
      Tensor2C a0{}, a1{}, a2{};
      for (std::size_t k = 0; k < k_n; ++k) {
        const cd uss = us[i * k_n + k], upp = up[i * k_n + k];
        const cd vss = vs[j * k_n + k], vpp = vp[j * k_n + k];
        const Tensor2C srow = uss * (vss * g.kss[k] + vpp * g.ksp[k]);
        const Tensor2C prow = upp * (vss * g.kps[k] + vpp * g.kpp[k]);
        const Tensor2C v0 = srow + prow;
        a0 += v0;
        if constexpr (WantJet) {
          a1 += (I * g.xi[k]) * v0;
          a2 += I * g.mus[k] * srow + I * g.mup[k] * prow;
        }
        // pole subtraction accumulators (phase only, residues applied later)
        const cd phase_w = px[i * k_n + k] * pyw[j * k_n + k];
        sub_p_sum += phase_w / (g.xi[k] - g.kR);
        sub_m_sum += phase_w / (g.xi[k] + g.kR);
      }
      acc[0] = g.pre * a0;
      if constexpr (WantJet) {
        acc[1] = g.pre * a1;
        acc[2] = g.pre * a2;
      }
      // subtract the Cauchy parts summed on the grid, add them back exactly
      const cd pvP = pv_phase_integral(delta, -g.xi_max, g.xi_max, g.kR);
      const cd pvM = pv_phase_integral(delta, -g.xi_max, g.xi_max, -g.kR);
      for (int c = 0; c < (WantJet ? 3 : 1); ++c) {
        acc[c] -= sub_p_sum * gP[c] + sub_m_sum * gM[c];
        acc[c] += pvP * gP[c] + pvM * gM[c];
        acc[c] = inv2pi * acc[c];
      }
      // residue bracket
      const cd eP = std::exp(I * delta * g.kR), eM = std::exp(-I * delta * g.kR);
      acc[0] += (I * 0.5) * (eP * gP[0] - eM * gM[0]);
      if constexpr (WantJet) {
        acc[1] += (I * 0.5) * (eP * (I * g.kR) * gP[0] - eM * (-I * g.kR) * gM[0]);
        acc[2] += (I * 0.5) * (eP * gP[2] - eM * gM[2]);
      }

      // image term -G(x, y') and optionally the direct part G(x, y)
      const Point yimg{y.x1, -y.x2};
      acc[0] -= fs.green(x, yimg);
      if constexpr (WantJet) {
        auto [d1i, d2i] = fs.green_grad(x, yimg);
        acc[1] -= d1i;
        acc[2] -= d2i;
      }
      if (include_direct) {
        acc[0] += fs.green(x, y);
        if constexpr (WantJet) {
          auto [d1d, d2d] = fs.green_grad(x, y);
          acc[1] += d1d;
          acc[2] += d2d;
        }
      }
      if constexpr (WantJet)
        (*jets)[i * ny + j] = acc;
      else
        (*vals)[i * ny + j] = acc[0];
    }
  }
}

}  // namespace

std::vector<Tensor2C> neumann_value_batch(const Halfspace& hs,
                                          const std::vector<Point>& xs,
                                          const std::vector<Point>& ys,
                                          bool include_direct) {
  std::vector<Tensor2C> out(xs.size() * ys.size());
  run_batch<false>(hs, xs, ys, include_direct, &out, nullptr);
  return out;
}

std::vector<TensorJet> neumann_jet_batch(const Halfspace& hs,
                                         const std::vector<Point>& xs,
                                         const std::vector<Point>& ys,
                                         bool include_direct) {
  std::vector<TensorJet> out(xs.size() * ys.size());
  run_batch<true>(hs, xs, ys, include_direct, nullptr, &out);
  return out;
}

}  // namespace hsrtm
