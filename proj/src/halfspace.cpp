#include "hsrtm/halfspace.hpp"

#include <cmath>

namespace hsrtm {

namespace {

// Panel length criterion: quarter oscillation of the Delta-phase plus the
// mu_alpha phases (which steepen near the branch points +-kp, +-ks).
std::function<double(double)> panel_len_fn(const WaveNumbers& wn, double rate_delta,
                                           double depth) {
  return [=](double xi) {
    const double axi = std::abs(xi);
    auto murate = [&](double k) {
      const double m = std::sqrt(std::abs(k * k - xi * xi));
      return axi / std::max(m, 1e-3 * k);
    };
    const double rate = rate_delta + 1.0 + depth * (murate(wn.ks) + murate(wn.kp));
    return M_PI / (2.0 * rate);
  };
}

}  // namespace

Halfspace::Halfspace(const ElasticMedium& m, ToleranceSpec tol)
    : medium_(m),
      wn_(derive_wavenumbers(m)),
      ctx_(m, wn_),
      fs_(m, wn_),
      tol_(tol) {}

std::pair<Tensor2C, Tensor2C> Halfspace::surface_residues(double y2) const {
  auto res_at = [&](double xi) {
    const cd ep = std::exp(I * ctx_.mup(xi) * y2);
    const cd es = std::exp(I * ctx_.mus(xi) * y2);
    const cd dp = ctx_.delta_prime(xi);
    return (1.0 / dp) * (ep * n_p(ctx_, xi) + es * n_s(ctx_, xi));
  };
  return {res_at(wn_.kR), res_at(-wn_.kR)};
}

Tensor2C Halfspace::surface_residue_bracket(double delta, double y2) const {
  auto [gP, gM] = surface_residues(y2);
  const cd eP = std::exp(I * delta * wn_.kR), eM = std::exp(-I * delta * wn_.kR);
  return (I * 0.5) * (eP * gP - eM * gM);
}

Tensor2C Halfspace::neumann_surface(double delta, double y2) const {
  return neumann_surface_jet(delta, y2)[0];
}

TensorJet Halfspace::neumann_surface_jet(double delta, double y2) const {
  if (!(y2 > 0.0)) throw std::domain_error("neumann_surface: y2 <= 0");
  const double kR = wn_.kR;

  // Per-alpha residue pieces at +-kR (value component).
  auto piece = [&](double xi) {
    const cd ep = std::exp(I * ctx_.mup(xi) * y2);
    const cd es = std::exp(I * ctx_.mus(xi) * y2);
    return std::pair<Tensor2C, Tensor2C>{ep * n_p(ctx_, xi), es * n_s(ctx_, xi)};
  };
  auto jet_residue = [&](double xi) {
    auto [pp, ss] = piece(xi);
    const cd dp = ctx_.delta_prime(xi);
    TensorJet j;
    j[0] = (1.0 / dp) * (pp + ss);
    j[1] = (I * xi) * j[0];
    j[2] = (1.0 / dp) * (I * ctx_.mup(xi) * pp + I * ctx_.mus(xi) * ss);
    return j;
  };
  const TensorJet gP = jet_residue(kR), gM = jet_residue(-kR);

  // Truncation: integrand entries grow ~ xi before the e^{-sqrt(xi^2-ks^2) y2}
  // decay; sample a magnitude for the cutoff formula.
  const double m_probe =
      norm(nhat_surface(ctx_, 0.43 * wn_.ks, y2)) + norm(gP[0]) + 1.0;
  AxisSpec sp;
  sp.decay_rate = y2;
  sp.decay_magnitude = 30.0 * m_probe;
  sp.decay_start = wn_.ks;
  const double xi_max = std::max(truncation_limit(sp, tol_), 1.2 * kR);

  auto sampler = [&](double xi) {
    auto [pp, ss] = piece(xi);
    const cd dinv = 1.0 / ctx_.delta(xi);
    TensorJet j;
    j[0] = dinv * (pp + ss);
    j[1] = (I * xi) * j[0];
    j[2] = dinv * (I * ctx_.mup(xi) * pp + I * ctx_.mus(xi) * ss);
    const cd sub_p = 1.0 / (xi - kR), sub_m = 1.0 / (xi + kR);
    for (int c = 0; c < 3; ++c) j[c] -= sub_p * gP[c] + sub_m * gM[c];
    return std::exp(I * delta * xi) * j;
  };

  std::vector<double> edges = build_panel_edges(
      -xi_max, xi_max, {-kR, -wn_.ks, -wn_.kp, 0.0, wn_.kp, wn_.ks, kR},
      panel_len_fn(wn_, std::abs(delta), y2), 1e-7);
  ToleranceSpec tol = tol_;
  tol.abs_tol = std::max(tol.abs_tol, 1e-11 * m_probe);
  TensorJet out = adaptive_integrate<TensorJet>(sampler, edges, tol).value;

  const cd pvP = pv_phase_integral(delta, -xi_max, xi_max, kR);
  const cd pvM = pv_phase_integral(delta, -xi_max, xi_max, -kR);
  for (int c = 0; c < 3; ++c) out[c] += pvP * gP[c] + pvM * gM[c];
  for (int c = 0; c < 3; ++c) out[c] = (1.0 / (2.0 * M_PI)) * out[c];

  // Residue bracket of the one-sided limit, as printed.
  const cd eP = std::exp(I * delta * kR), eM = std::exp(-I * delta * kR);
  TensorJet bracket;
  bracket[0] = (I * 0.5) * (eP * gP[0] - eM * gM[0]);
  bracket[1] = (I * 0.5) * (eP * (I * kR) * gP[0] - eM * (-I * kR) * gM[0]);
  bracket[2] = (I * 0.5) * (eP * gP[2] - eM * gM[2]);
  // gP[1] carries i*kR*gP[0]; bracket[1] above uses the phase derivative.
  return out + bracket;
}

Tensor2C Halfspace::traction_dirichlet(double delta, double z2) const {
  if (!(z2 > 0.0)) throw std::domain_error("traction_dirichlet: z2 <= 0");
  const double m_probe = norm(that_d(ctx_, 0.0, z2)) +
                         norm(that_d(ctx_, 0.9 * wn_.ks, z2)) + 1.0;
  AxisSpec sp;
  sp.decay_rate = z2;
  sp.decay_magnitude = 30.0 * m_probe * (1.0 + wn_.ks * wn_.ks);
  sp.decay_start = wn_.ks;
  const double xi_max = truncation_limit(sp, tol_);
  auto f = [&](double xi) {
    return std::exp(I * delta * xi) * that_d(ctx_, xi, z2);
  };
  std::vector<double> edges =
      build_panel_edges(-xi_max, xi_max, {-wn_.ks, -wn_.kp, 0.0, wn_.kp, wn_.ks},
                        panel_len_fn(wn_, std::abs(delta), z2), 1e-7);
  ToleranceSpec tol = tol_;
  tol.abs_tol = std::max(tol.abs_tol, 1e-11 * m_probe);
  return (1.0 / (2.0 * M_PI)) *
         adaptive_integrate<Tensor2C>(f, edges, tol).value;
}

TensorJet Halfspace::traction_dirichlet_jet(double delta, double z2) const {
  if (!(z2 > 0.0)) throw std::domain_error("traction_dirichlet_jet: z2 <= 0");
  const double m_probe = norm(that_d(ctx_, 0.0, z2)) +
                         norm(that_d(ctx_, 0.9 * wn_.ks, z2)) + 1.0;
  AxisSpec sp;
  sp.decay_rate = z2;
  sp.decay_magnitude = 30.0 * m_probe * (1.0 + wn_.ks * wn_.ks);
  sp.decay_start = wn_.ks;
  const double xi_max = truncation_limit(sp, tol_);
  auto f = [&](double xi) {
    const cd ep = std::exp(I * ctx_.mup(xi) * z2);
    const cd es = std::exp(I * ctx_.mus(xi) * z2);
    const Tensor2C tp = ep * t_p(ctx_, xi), ts = es * t_s(ctx_, xi);
    TensorJet j;
    j[0] = tp + ts;
    j[1] = (I * xi) * j[0];
    j[2] = I * ctx_.mup(xi) * tp + I * ctx_.mus(xi) * ts;
    return std::exp(I * delta * xi) * j;
  };
  std::vector<double> edges =
      build_panel_edges(-xi_max, xi_max, {-wn_.ks, -wn_.kp, 0.0, wn_.kp, wn_.ks},
                        panel_len_fn(wn_, std::abs(delta), z2), 1e-7);
  ToleranceSpec tol = tol_;
  tol.abs_tol = std::max(tol.abs_tol, 1e-11 * m_probe);
  TensorJet out = adaptive_integrate<TensorJet>(f, edges, tol).value;
  for (int c = 0; c < 3; ++c) out[c] = (1.0 / (2.0 * M_PI)) * out[c];
  return out;
}

TensorJet Halfspace::correction_jet(Point x, Point y) const {
  if (!(x.x2 >= 0.0) || !(y.x2 > 0.0))
    throw std::domain_error("correction: requires x2 >= 0, y2 > 0");
  const double kR = wn_.kR;
  const double delta = x.x1 - y.x1;
  const double depth = x.x2 + y.x2;

  // Per-(x-side alpha) pieces: S_alpha(xi) = (i/(omega^2 delta)) *
  //   e^{i mu_alpha x2} sum_beta A_{alpha beta} e^{i mu_beta y2}.
  auto pieces = [&](double xi, cd denom) {
    const cd ms = ctx_.mus(xi), mp = ctx_.mup(xi);
    const cd exs = std::exp(I * ms * x.x2), exp_ = std::exp(I * mp * x.x2);
    const cd eys = std::exp(I * ms * y.x2), eyp = std::exp(I * mp * y.x2);
    const cd pre = I / (ctx_.omega2() * denom);
    const Tensor2C sp_ = pre * (exs * (eys * a_ss(ctx_, xi) + eyp * a_sp(ctx_, xi)));
    const Tensor2C pp_ = pre * (exp_ * (eys * a_ps(ctx_, xi) + eyp * a_pp(ctx_, xi)));
    return std::pair<Tensor2C, Tensor2C>{sp_, pp_};
  };
  auto jet_at = [&](double xi, cd denom) {
    auto [ss, pp] = pieces(xi, denom);
    TensorJet j;
    j[0] = ss + pp;
    j[1] = (I * xi) * j[0];
    j[2] = I * ctx_.mus(xi) * ss + I * ctx_.mup(xi) * pp;
    return j;
  };
  const TensorJet gP = jet_at(kR, ctx_.delta_prime(kR));
  const TensorJet gM = jet_at(-kR, ctx_.delta_prime(-kR));

  const double m_probe = quad_norm(jet_at(0.37 * wn_.ks, ctx_.delta(0.37 * wn_.ks))) +
                         quad_norm(gP) + 1.0;
  AxisSpec sp;
  sp.decay_rate = depth > 0.0 ? depth : y.x2;
  sp.decay_magnitude = 30.0 * m_probe;
  sp.decay_start = wn_.ks;
  const double xi_max = std::max(truncation_limit(sp, tol_), 1.2 * kR);

  auto sampler = [&](double xi) {
    TensorJet j = jet_at(xi, ctx_.delta(xi));
    const cd sub_p = 1.0 / (xi - kR), sub_m = 1.0 / (xi + kR);
    for (int c = 0; c < 3; ++c) j[c] -= sub_p * gP[c] + sub_m * gM[c];
    return std::exp(I * delta * xi) * j;
  };

  std::vector<double> edges = build_panel_edges(
      -xi_max, xi_max, {-kR, -wn_.ks, -wn_.kp, 0.0, wn_.kp, wn_.ks, kR},
      panel_len_fn(wn_, std::abs(delta), depth), 1e-7);
  ToleranceSpec tol = tol_;
  tol.abs_tol = std::max(tol.abs_tol, 1e-11 * m_probe);
  TensorJet out = adaptive_integrate<TensorJet>(sampler, edges, tol).value;

  const cd pvP = pv_phase_integral(delta, -xi_max, xi_max, kR);
  const cd pvM = pv_phase_integral(delta, -xi_max, xi_max, -kR);
  for (int c = 0; c < 3; ++c) out[c] += pvP * gP[c] + pvM * gM[c];
  for (int c = 0; c < 3; ++c) out[c] = (1.0 / (2.0 * M_PI)) * out[c];

  const cd eP = std::exp(I * delta * kR), eM = std::exp(-I * delta * kR);
  TensorJet bracket;
  bracket[0] = (I * 0.5) * (eP * gP[0] - eM * gM[0]);
  bracket[1] = (I * 0.5) * (eP * (I * kR) * gP[0] - eM * (-I * kR) * gM[0]);
  bracket[2] = (I * 0.5) * (eP * gP[2] - eM * gM[2]);
  return out + bracket;
}

Tensor2C Halfspace::correction(Point x, Point y) const {
  return correction_jet(x, y)[0];
}

Tensor2C Halfspace::remainder(Point x, Point y) const {
  const Point yimg{y.x1, -y.x2};
  return correction(x, y) - fs_.green(x, yimg);
}

TensorJet Halfspace::remainder_jet(Point x, Point y) const {
  const Point yimg{y.x1, -y.x2};
  TensorJet out = correction_jet(x, y);
  auto [d1, d2] = fs_.green_grad(x, yimg);
  out[0] -= fs_.green(x, yimg);
  out[1] -= d1;
  out[2] -= d2;
  return out;
}

Tensor2C Halfspace::neumann_bulk(Point x, Point y) const {
  if (x.x1 == y.x1 && x.x2 == y.x2)
    throw std::domain_error("neumann_bulk: x == y");
  if (x.x2 == 0.0) return neumann_surface(x.x1 - y.x1, y.x2);
  return fs_.green(x, y) + remainder(x, y);
}

TensorJet Halfspace::neumann_bulk_jet(Point x, Point y) const {
  if (x.x1 == y.x1 && x.x2 == y.x2)
    throw std::domain_error("neumann_bulk_jet: x == y");
  TensorJet out = remainder_jet(x, y);
  auto [d1, d2] = fs_.green_grad(x, y);
  out[0] += fs_.green(x, y);
  out[1] += d1;
  out[2] += d2;
  return out;
}

Tensor2C traction_of_jet(const TensorJet& jet, Point nu, double la, double mu) {
  Tensor2C out;
  for (int j = 0; j < 2; ++j) {
    const cd du1d1 = (j == 0) ? jet[1].m11 : jet[1].m12;
    const cd du2d1 = (j == 0) ? jet[1].m21 : jet[1].m22;
    const cd du1d2 = (j == 0) ? jet[2].m11 : jet[2].m12;
    const cd du2d2 = (j == 0) ? jet[2].m21 : jet[2].m22;
    const cd divu = du1d1 + du2d2;
    const cd t1 = la * divu * nu.x1 +
                  mu * (2.0 * du1d1 * nu.x1 + (du1d2 + du2d1) * nu.x2);
    const cd t2 = la * divu * nu.x2 +
                  mu * ((du1d2 + du2d1) * nu.x1 + 2.0 * du2d2 * nu.x2);
    if (j == 0) {
      out.m11 = t1;
      out.m21 = t2;
    } else {
      out.m12 = t1;
      out.m22 = t2;
    }
  }
  return out;
}

Tensor2C Halfspace::neumann_stress(Point x, Point nu, Point y) const {
  return traction_of_jet(neumann_bulk_jet(x, y), nu, medium_.lambda, medium_.mu);
}

Tensor2C Halfspace::remainder_stress(Point x, Point nu, Point y) const {
  return traction_of_jet(remainder_jet(x, y), nu, medium_.lambda, medium_.mu);
}

Tensor2C Halfspace::neumann_stress_surface_source(Point x, Point nu,
                                                  double xs1) const {
  const TensorJet s = neumann_surface_jet(xs1 - x.x1, x.x2);
  TensorJet jet;
  jet[0] = transpose(s[0]);
  jet[1] = transpose(-1.0 * s[1]);  // d/dx1 = -d/d delta
  jet[2] = transpose(s[2]);
  return traction_of_jet(jet, nu, medium_.lambda, medium_.mu);
}

Tensor2C Halfspace::neumann_bulk_eps(Point x, Point y, double eps) const {
  if (!(eps > 0.0)) throw std::domain_error("neumann_bulk_eps: eps <= 0");
  if (x.x2 == y.x2)
    throw std::domain_error("neumann_bulk_eps: needs x2 != y2 (sign factor)");
  SpectralCtx ce(medium_, wn_, eps);
  const double delta = x.x1 - y.x1;
  const double m_probe = norm(nhat_bulk(ce, 0.41 * wn_.ks, x.x2, y.x2)) + 1.0;
  AxisSpec sp;
  sp.decay_rate = std::min(std::abs(x.x2 - y.x2), x.x2 + y.x2);
  sp.decay_magnitude = 100.0 * m_probe;
  sp.decay_start = wn_.ks;
  const double xi_max = std::max(truncation_limit(sp, tol_), 1.2 * wn_.kR);
  auto f = [&](double xi) {
    return std::exp(I * delta * xi) * nhat_bulk(ce, xi, x.x2, y.x2);
  };
  // The smoothed branch points and Rayleigh peaks have width ~ eps * k.
  std::vector<double> edges = build_panel_edges(
      -xi_max, xi_max,
      {-wn_.kR, -wn_.ks, -wn_.kp, 0.0, wn_.kp, wn_.ks, wn_.kR},
      panel_len_fn(wn_, std::abs(delta),
                   std::abs(x.x2 - y.x2) + x.x2 + y.x2),
      1e-9);
  ToleranceSpec tol = tol_;
  tol.max_panels = std::max(tol.max_panels, 60000);
  tol.abs_tol = std::max(tol.abs_tol, 1e-10 * m_probe);
  return (1.0 / (2.0 * M_PI)) *
         adaptive_integrate<Tensor2C>(f, edges, tol).value;
}

}  // namespace hsrtm
