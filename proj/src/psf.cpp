#include "hsrtm/psf.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "hsrtm/quadrature.hpp"
#include "hsrtm/spectral.hpp"
#include "hsrtm/surface_table.hpp"

namespace hsrtm {

namespace {

Tensor2C mat_m1(double xi, cd mup) {
  return {xi * xi, -xi * mup, -xi * mup, mup * mup};
}
Tensor2C mat_m2(double xi, cd mus) {
  return {mus * mus, xi * mus, xi * mus, xi * xi};
}

}  // namespace

Tensor2C psf_F(const Halfspace& hs, Point z, Point y) {
  if (!(z.x2 > 0.0) || !(y.x2 > 0.0))
    throw std::domain_error("psf_F: points must be in the upper half plane");
  const WaveNumbers& wn = hs.wavenumbers();
  const ElasticMedium& m = hs.medium();
  SpectralCtx ctx(m, wn);
  ToleranceSpec tol = hs.tolerance();
  const double dz = z.x2 - y.x2, dh = y.x1 - z.x1;
  const double mu = m.mu;

  // Bands I and II over (-kp, kp), mapped by xi = kp sin(theta) so the
  // sqrt(kp^2 - xi^2) endpoints fold away.
  auto band12 = [&](double th) {
    const double xi = wn.kp * std::sin(th);
    const double jac = wn.kp * std::cos(th);
    const cd mup = ctx.mup(xi), mus = ctx.mus(xi);
    const cd g = ctx.gamma(xi), d = ctx.delta(xi);
    const cd ks2 = cd(wn.ks * wn.ks);
    const cd pre = -I * ks2 / (2.0 * M_PI * mu * g * d);
    const cd ph1 = std::exp(I * (mup * dz + xi * dh));
    const cd ph2 = std::exp(I * (mus * dz + xi * dh));
    return jac * (pre * mus * ph1 * mat_m1(xi, mup) +
                  pre * mup * ph2 * mat_m2(xi, mus));
  };
  const double rate12 =
      wn.kp * (std::abs(dz) + std::abs(dh)) + 2.0;
  std::vector<double> edges12 = build_panel_edges(
      -M_PI / 2.0, M_PI / 2.0, {0.0},
      [&](double) { return M_PI / (2.0 * rate12); }, 1e-6);
  Tensor2C out = adaptive_integrate<Tensor2C>(band12, edges12, tol).value;

  // Band III over kp < |xi| < ks, cosine-folded at both endpoints.
  const double c = 0.5 * (wn.kp + wn.ks), h = 0.5 * (wn.ks - wn.kp);
  auto band3 = [&](double ps, double sgn) {
    const double xi = sgn * (c - h * std::cos(ps));
    const double jac = h * std::sin(ps);
    const cd mup = ctx.mup(xi), mus = ctx.mus(xi);
    const cd g = ctx.gamma(xi), dconj = std::conj(ctx.delta(xi));
    const cd pre = -I * (wn.ks * wn.ks - 4.0 * xi * xi) * mup /
                   (2.0 * M_PI * mu * g * dconj);
    const cd ph = std::exp(I * (mus * dz + xi * dh));
    return jac * (pre * ph * mat_m2(xi, mus));
  };
  const double rate3 = wn.ks * (std::abs(dz) + std::abs(dh)) + 2.0;
  std::vector<double> edges3 = build_panel_edges(
      0.0, M_PI, {}, [&](double) { return M_PI / (2.0 * rate3); }, 1e-6);
  for (double sgn : {1.0, -1.0}) {
    out += adaptive_integrate<Tensor2C>(
               [&](double ps) { return band3(ps, sgn); }, edges3, tol)
               .value;
  }
  return out;
}

Tensor2C psf_J(const Halfspace& hs, Point z, Point y) {
  if (!(z.x2 > 0.0) || !(y.x2 > 0.0))
    throw std::domain_error("psf_J: points must be in the upper half plane");
  const WaveNumbers& wn = hs.wavenumbers();
  SpectralCtx ctx(hs.medium(), wn);
  ToleranceSpec tol = hs.tolerance();
  const double delta = y.x1 - z.x1;
  const double kR = wn.kR;

  // g(xi) = sum_{alpha,beta} T_alpha^T conj(N_beta)
  //         e^{i(mu_alpha z2 - conj(mu_beta) y2)}; integrand g/conj(delta).
  auto gfun = [&](double xi) {
    const cd mup = ctx.mup(xi), mus = ctx.mus(xi);
    const Tensor2C tpT = transpose(t_p(ctx, xi)), tsT = transpose(t_s(ctx, xi));
    const Tensor2C npc = conj(n_p(ctx, xi)), nsc = conj(n_s(ctx, xi));
    const cd ezp = std::exp(I * mup * z.x2), ezs = std::exp(I * mus * z.x2);
    const cd eyp = std::exp(-I * std::conj(mup) * y.x2);
    const cd eys = std::exp(-I * std::conj(mus) * y.x2);
    Tensor2C g = (ezp * eyp) * matmul(tpT, npc) + (ezp * eys) * matmul(tpT, nsc);
    g += (ezs * eyp) * matmul(tsT, npc) + (ezs * eys) * matmul(tsT, nsc);
    return g;
  };
  const Tensor2C gP = (1.0 / std::conj(ctx.delta_prime(kR))) * gfun(kR);
  const Tensor2C gM = (1.0 / std::conj(ctx.delta_prime(-kR))) * gfun(-kR);

  const double m_probe = norm(gfun(0.37 * wn.ks)) / std::pow(wn.ks, 4) + norm(gP);
  AxisSpec sp;
  sp.decay_rate = z.x2 + y.x2;
  sp.decay_magnitude = 1e3 * (m_probe + 1.0);
  sp.decay_start = wn.ks;
  const double xi_max = std::max(truncation_limit(sp, tol), 1.25 * kR);

  auto sampler = [&](double xi) {
    Tensor2C v = (1.0 / std::conj(ctx.delta(xi))) * gfun(xi);
    v -= (1.0 / (xi - kR)) * gP + (1.0 / (xi + kR)) * gM;
    return std::exp(I * delta * xi) * v;
  };
  auto murate = [&](double xi, double k) {
    const double mm = std::sqrt(std::abs(k * k - xi * xi));
    return std::abs(xi) / std::max(mm, 1e-3 * k);
  };
  auto len = [&](double xi) {
    const double rate = std::abs(delta) + 1.0 +
                        (z.x2 + y.x2) * (murate(xi, wn.ks) + murate(xi, wn.kp));
    return M_PI / (2.0 * rate);
  };
  std::vector<double> edges = build_panel_edges(
      -xi_max, xi_max, {-kR, -wn.ks, -wn.kp, 0.0, wn.kp, wn.ks, kR}, len, 1e-7);
  ToleranceSpec tt = tol;
  tt.abs_tol = std::max(tt.abs_tol, 1e-11 * (m_probe + 1.0));
  Tensor2C out = adaptive_integrate<Tensor2C>(sampler, edges, tt).value;
  out += pv_phase_integral(delta, -xi_max, xi_max, kR) * gP;
  out += pv_phase_integral(delta, -xi_max, xi_max, -kR) * gM;
  out = (1.0 / (2.0 * M_PI)) * out;

  // minus the residue bracket, as printed for the conjugated pole
  const cd eP = std::exp(I * delta * kR), eM = std::exp(-I * delta * kR);
  out -= (I * 0.5) * (eP * gP - eM * gM);
  return out;
}

Tensor2C psf_Jd(const Halfspace& hs, Point z, Point y, double d) {
  if (!(d >= 0.0)) throw std::domain_error("psf_Jd: aperture must be >= 0");
  if (d == 0.0) return {};
  const double ks = hs.wavenumbers().ks;
  const double max_delta = d + std::abs(z.x1) + std::abs(y.x1) + 1.0;
  SurfaceTable ttab(hs, SurfaceTable::Kind::traction, z.x2, max_delta);
  SurfaceTable ntab(hs, SurfaceTable::Kind::neumann, y.x2, max_delta);
  auto f = [&](double x1) {
    const Tensor2C td = ttab.value(x1 - z.x1);
    const Tensor2C nn = ntab.value(x1 - y.x1);
    return matmul(transpose(td), conj(nn));
  };
  // one oscillation of the fastest (2 ks) phase per seed panel
  std::vector<double> edges = build_panel_edges(
      -d, d, {z.x1, y.x1}, [&](double) { return M_PI / ks; }, 1e-6);
  ToleranceSpec tol = hs.tolerance();
  tol.rel_tol = std::max(tol.rel_tol, 1e-7);
  return adaptive_integrate<Tensor2C>(f, edges, tol).value;
}

PsfReport psf_resolution_profile(const Halfspace& hs, const PsfConfig& cfg) {
  if (cfg.n1 < 2 || cfg.n2 < 2 || cfg.x1_hi <= cfg.x1_lo || cfg.x2_hi <= cfg.x2_lo)
    throw std::invalid_argument("psf_resolution_profile: bad window/grid");
  const double h_depth = cfg.x2_lo;
  const double diam = std::hypot(cfg.x1_hi - cfg.x1_lo, cfg.x2_hi - cfg.x2_lo);
  if (std::max(std::abs(cfg.x1_lo), std::abs(cfg.x1_hi)) > cfg.c1 * cfg.aperture_d ||
      diam > cfg.c2 * h_depth) {
    std::cerr << "[psf] warning: imaging window violates the aperture/depth "
                 "assumption (|x1| <= c1 d, diam <= c2 h)\n";
  }

  PsfReport rep;
  rep.n1 = cfg.n1;
  rep.n2 = cfg.n2;
  rep.x1_lo = cfg.x1_lo;
  rep.x2_lo = cfg.x2_lo;
  rep.dx1 = (cfg.x1_hi - cfg.x1_lo) / (cfg.n1 - 1);
  rep.dx2 = (cfg.x2_hi - cfg.x2_lo) / (cfg.n2 - 1);
  const Point yc{0.5 * (cfg.x1_lo + cfg.x1_hi), 0.5 * (cfg.x2_lo + cfg.x2_hi)};

  const int n = cfg.n1 * cfg.n2;
  rep.im_f11.assign(n, 0.0);
  rep.im_f22.assign(n, 0.0);
  rep.abs_f.assign(n, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < n; ++idx) {
    const int i1 = idx % cfg.n1, i2 = idx / cfg.n1;
    const Point zp{cfg.x1_lo + rep.dx1 * i1, cfg.x2_lo + rep.dx2 * i2};
    const Tensor2C f = psf_F(hs, zp, yc);
    rep.im_f11[idx] = f.m11.imag();
    rep.im_f22[idx] = f.m22.imag();
    rep.abs_f[idx] = norm(f);
  }

  // peak of -(Im F11 + Im F22), its location and half-widths at 50%
  int best = 0;
  double bestv = -1e300;
  std::vector<double> field(n);
  for (int idx = 0; idx < n; ++idx) {
    field[idx] = -(rep.im_f11[idx] + rep.im_f22[idx]);
    if (field[idx] > bestv) {
      bestv = field[idx];
      best = idx;
    }
  }
  rep.peak_value = bestv;
  const int b1 = best % cfg.n1, b2 = best / cfg.n1;
  rep.peak_location = {cfg.x1_lo + rep.dx1 * b1, cfg.x2_lo + rep.dx2 * b2};
  {
    std::vector<double> tmp(field.begin(), field.end());
    for (double& v : tmp) v = std::abs(v);
    std::nth_element(tmp.begin(), tmp.begin() + n / 2, tmp.end());
    rep.background_median = tmp[n / 2];
  }
  auto halfwidth = [&](bool along_x1) {
    const double target = 0.5 * bestv;
    double lo = 0.0, hi = 0.0;
    const int nn = along_x1 ? cfg.n1 : cfg.n2;
    const int bb = along_x1 ? b1 : b2;
    auto at = [&](int i) {
      return field[along_x1 ? (b2 * cfg.n1 + i) : (i * cfg.n1 + b1)];
    };
    for (int i = bb; i + 1 < nn; ++i)
      if (at(i) >= target && at(i + 1) < target) {
        hi = i + (at(i) - target) / (at(i) - at(i + 1));
        break;
      }
    for (int i = bb; i > 0; --i)
      if (at(i) >= target && at(i - 1) < target) {
        lo = i - (at(i) - target) / (at(i) - at(i - 1));
        break;
      }
    const double step = along_x1 ? rep.dx1 : rep.dx2;
    return (hi > 0.0 && lo > 0.0) ? (hi - lo) * step : 0.0;
  };
  rep.halfwidth_x1 = halfwidth(true);
  rep.halfwidth_x2 = halfwidth(false);

  if (cfg.jd_stride > 0) {
    rep.jd_stride = cfg.jd_stride;
    for (int i2 = 0; i2 < cfg.n2; i2 += cfg.jd_stride)
      for (int i1 = 0; i1 < cfg.n1; i1 += cfg.jd_stride) {
        const Point zp{cfg.x1_lo + rep.dx1 * i1, cfg.x2_lo + rep.dx2 * i2};
        const Tensor2C f = psf_F(hs, zp, yc);
        const Tensor2C jd = psf_Jd(hs, zp, yc, cfg.aperture_d);
        rep.jd_err.push_back(norm(jd - f));
      }
  }

  for (double v : rep.abs_f)
    if (!std::isfinite(v))
      throw std::runtime_error("psf_resolution_profile: non-finite field");
  return rep;
}

void write_psf_report(const PsfReport& rep, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write_grid = [&](const std::string& name, const std::vector<double>& g) {
    std::ofstream out(fs::path(dir) / name);
    out.precision(17);
    for (int i2 = 0; i2 < rep.n2; ++i2)
      for (int i1 = 0; i1 < rep.n1; ++i1)
        out << rep.x1_lo + rep.dx1 * i1 << ',' << rep.x2_lo + rep.dx2 * i2 << ','
            << g[i2 * rep.n1 + i1] << '\n';
  };
  write_grid("im_f11.csv", rep.im_f11);
  write_grid("im_f22.csv", rep.im_f22);
  write_grid("abs_f.csv", rep.abs_f);
  std::ofstream sum(fs::path(dir) / "summary.txt");
  sum.precision(17);
  sum << "peak_value " << rep.peak_value << "\n"
      << "peak_location " << rep.peak_location.x1 << ' ' << rep.peak_location.x2
      << "\n"
      << "background_median " << rep.background_median << "\n"
      << "halfwidth_x1 " << rep.halfwidth_x1 << "\n"
      << "halfwidth_x2 " << rep.halfwidth_x2 << "\n";
  if (!rep.jd_err.empty()) {
    std::ofstream jd(fs::path(dir) / "jd_err.csv");
    jd.precision(17);
    for (double v : rep.jd_err) jd << v << '\n';
  }
}

}  // namespace hsrtm
