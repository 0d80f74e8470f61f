#include <cmath>

#include "doctest.h"
#include "hsrtm/psf.hpp"
#include "hsrtm/surface_table.hpp"

using namespace hsrtm;

namespace {
const ElasticMedium kMedium(0.5, 0.25, 2.0 * M_PI);
Halfspace& shared_hs() {
  static Halfspace hs(kMedium);
  return hs;
}
}  // namespace

TEST_CASE("surface tables match the adaptive evaluators") {
  Halfspace& hs = shared_hs();
  SurfaceTable nt(hs, SurfaceTable::Kind::neumann, 10.0, 30.0);
  SurfaceTable tt(hs, SurfaceTable::Kind::traction, 10.0, 30.0);
  for (double d : {0.0, 0.37, 3.0, -11.2, 27.9}) {
    const Tensor2C nv = hs.neumann_surface(d, 10.0);
    CHECK(norm(nt.value(d) - nv) < 2e-6 * norm(nv));
    const Tensor2C tv = hs.traction_dirichlet(d, 10.0);
    CHECK(norm(tt.value(d) - tv) < 2e-6 * norm(tv));
  }
  // jets
  const TensorJet ja = hs.neumann_surface_jet(2.4, 10.0);
  const TensorJet jt = nt.jet(2.4);
  for (int c = 0; c < 3; ++c) CHECK(norm(jt[c] - ja[c]) < 5e-6 * norm(ja[c]));
  const TensorJet ta = hs.traction_dirichlet_jet(-4.1, 10.0);
  const TensorJet tb = tt.jet(-4.1);
  for (int c = 0; c < 3; ++c) CHECK(norm(tb[c] - ta[c]) < 5e-6 * norm(ta[c]));
}

TEST_CASE("F at coincident points: sign, lower bound, zero off-diagonals") {
  Halfspace& hs = shared_hs();
  const Point zy{0.0, 10.0};
  const Tensor2C f = psf_F(hs, zy, zy);
  const double bound = 1.0 / (4.0 * (kMedium.lambda + 2.0 * kMedium.mu));
  CHECK(-f.m11.imag() >= bound);
  CHECK(-f.m22.imag() >= bound);
  CHECK(std::abs(f.m12.imag()) <= 1e-8 * norm(f));
  CHECK(std::abs(f.m21.imag()) <= 1e-8 * norm(f));
  CHECK(norm(f - transpose(f)) <= 1e-8 * norm(f));
}

TEST_CASE("F is symmetric at generic pairs") {
  Halfspace& hs = shared_hs();
  const Point pts[][2] = {{{0.3, 9.1}, {-0.7, 10.6}},
                          {{1.5, 8.4}, {1.1, 11.2}},
                          {{-1.8, 10.9}, {0.2, 9.7}}};
  for (const auto& p : pts) {
    const Tensor2C f = psf_F(hs, p[0], p[1]);
    CHECK(norm(f - transpose(f)) < 1e-8 * norm(f));
  }
}

TEST_CASE("F decays away from the source point") {
  Halfspace& hs = shared_hs();
  const Point y{0.0, 10.0};
  const double ks = hs.wavenumbers().ks;
  // envelope comparison with a 3-point local max
  auto env = [&](double kr) {
    double m = 0.0;
    for (double f : {-0.02, 0.0, 0.02})
      m = std::max(m, norm(psf_F(hs, {y.x1 + kr / ks + f, y.x2}, y)));
    return m;
  };
  CHECK(env(20.0) < env(5.0));
}

TEST_CASE("J and J_d: aperture convergence and closeness to F") {
  Halfspace& hs = shared_hs();
  const Point zy{0.0, 10.0};
  const Tensor2C f = psf_F(hs, zy, zy);
  const Tensor2C j = psf_J(hs, zy, zy);
  const Tensor2C j25 = psf_Jd(hs, zy, zy, 25.0);
  const Tensor2C j50 = psf_Jd(hs, zy, zy, 50.0);
  const Tensor2C j100 = psf_Jd(hs, zy, zy, 100.0);

  const double imf = std::abs(f.m11.imag());
  CHECK(norm(j50 - f) <= 0.35 * imf);            // h=10, d=50 pairing
  CHECK(std::abs(j50.m11.imag()) > 0.65 * imf);  // within 35 percent
  CHECK(norm(j - f) <= 0.5 * std::max(std::abs(f.m11.imag()),
                                      std::abs(f.m22.imag())));
  // aperture error ordering (h/d)^2
  CHECK(norm(j25 - j50) >= norm(j50 - j100));
  // convergence toward the d -> infinity limit
  CHECK(norm(j - j50) < norm(j - j25));

  // zero-measure aperture
  CHECK(norm(psf_Jd(hs, zy, zy, 0.0)) == 0.0);
}

TEST_CASE("residue bracket contribution to J decays exponentially in h") {
  Halfspace& hs = shared_hs();
  const WaveNumbers& wn = hs.wavenumbers();
  std::vector<double> hdep{2.0, 4.0, 8.0}, ln;
  for (double h : hdep) {
    // magnitude of the bracket part of J at z=y=(0,h)
    SpectralCtx ctx(kMedium, wn);
    auto gfun = [&](double xi) {
      const cd mup = ctx.mup(xi), mus = ctx.mus(xi);
      const Tensor2C tpT = transpose(t_p(ctx, xi)), tsT = transpose(t_s(ctx, xi));
      const Tensor2C npc = conj(n_p(ctx, xi)), nsc = conj(n_s(ctx, xi));
      const cd ezp = std::exp(I * mup * h), ezs = std::exp(I * mus * h);
      const cd eyp = std::exp(-I * std::conj(mup) * h);
      const cd eys = std::exp(-I * std::conj(mus) * h);
      Tensor2C g = (ezp * eyp) * matmul(tpT, npc) + (ezp * eys) * matmul(tpT, nsc);
      g += (ezs * eyp) * matmul(tsT, npc) + (ezs * eys) * matmul(tsT, nsc);
      return g;
    };
    const Tensor2C br = (1.0 / std::conj(ctx.delta_prime(wn.kR))) * gfun(wn.kR) -
                        (1.0 / std::conj(ctx.delta_prime(-wn.kR))) * gfun(-wn.kR);
    ln.push_back(std::log(norm(br)));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < hdep.size(); ++i) {
    sx += 2.0 * hdep[i];  // both depths move together: exponent ~ 2h
    sy += ln[i];
    sxx += 4.0 * hdep[i] * hdep[i];
    sxy += 2.0 * hdep[i] * ln[i];
  }
  const double n = static_cast<double>(hdep.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double expect = -std::sqrt(wn.kR * wn.kR - wn.ks * wn.ks);
  CHECK(std::abs(slope - expect) < 0.1 * std::abs(expect));
}

TEST_CASE("resolution profile: peak at z=y, dominance, finite grids") {
  Halfspace& hs = shared_hs();
  PsfConfig cfg;
  cfg.aperture_d = 50.0;
  cfg.x1_lo = -1.0;
  cfg.x1_hi = 1.0;
  cfg.x2_lo = 9.0;
  cfg.x2_hi = 11.0;
  cfg.n1 = 21;
  cfg.n2 = 21;
  const PsfReport rep = psf_resolution_profile(hs, cfg);
  CHECK(static_cast<int>(rep.im_f11.size()) == cfg.n1 * cfg.n2);
  // y is the window centre; peak within one grid cell
  CHECK(std::abs(rep.peak_location.x1 - 0.0) <= rep.dx1 + 1e-12);
  CHECK(std::abs(rep.peak_location.x2 - 10.0) <= rep.dx2 + 1e-12);
  CHECK(rep.peak_value > 3.0 * rep.background_median);
  CHECK(rep.halfwidth_x1 > 0.0);
  CHECK(rep.halfwidth_x2 > 0.0);
}
