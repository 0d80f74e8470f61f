#include <cmath>
#include <fstream>

#include "doctest.h"
#include "hsrtm/forward.hpp"
#include "hsrtm/green_batch.hpp"
#include "hsrtm/nystrom.hpp"

using namespace hsrtm;

namespace {
const ElasticMedium kMedium(0.5, 0.25, 2.0 * M_PI);
Halfspace& shared_hs() {
  static Halfspace hs(kMedium);
  return hs;
}
}  // namespace

TEST_CASE("curve factory: sample points and invariants") {
  const BoundaryCurve kite = make_curve("kite", {}, {0.0, 10.0});
  const Point k0 = kite.point(0.0);
  CHECK(k0.x1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k0.x2 == doctest::Approx(10.0).epsilon(1e-14));

  const BoundaryCurve leaf = make_curve("leaf", {3}, {0.0, 10.0});
  const Point l0 = leaf.point(0.0);
  CHECK(l0.x1 == doctest::Approx(1.2).epsilon(1e-14));
  CHECK(l0.x2 == doctest::Approx(10.0).epsilon(1e-14));

  const BoundaryCurve circ = make_curve("circle", {1.0}, {0.0, 10.0});
  const Point c0 = circ.point(M_PI / 2.0);
  CHECK(c0.x1 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c0.x2 == doctest::Approx(11.0).epsilon(1e-14));
  // outward normal on the circle
  const Point nrm = circ.normal(0.7);
  CHECK(nrm.x1 == doctest::Approx(std::cos(0.7)).epsilon(1e-12));
  CHECK(nrm.x2 == doctest::Approx(std::sin(0.7)).epsilon(1e-12));

  make_curve("peanut", {}, {0.0, 10.0});
  make_curve("rounded_square", {}, {0.0, 10.0});

  // curve dipping below the surface rejected
  CHECK_THROWS_AS(make_curve("circle", {1.0}, {0.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_curve("nonsense", {}, {0.0, 10.0}), std::invalid_argument);
}

TEST_CASE("periodic quadrature rules reproduce the trig transforms") {
  const int n_pts = 32, n = n_pts / 2;
  const std::vector<double> logw = kress_log_weights_grid(n_pts);
  const std::vector<double> hw = hilbert_weights_grid(n_pts);
  for (int i : {0, 5}) {
    const double ti = M_PI * i / n;
    for (int m = 0; m < n; ++m) {
      cd logsum = 0.0, hsum = 0.0;
      for (int j = 0; j < n_pts; ++j) {
        const double tj = M_PI * j / n;
        const int k = ((j - i) % n_pts + n_pts) % n_pts;
        logsum += logw[k] * std::exp(I * double(m) * tj);
        hsum += hw[k] * std::exp(I * double(m) * tj);
      }
      const cd logref =
          (m == 0) ? cd(0.0) : -(2.0 * M_PI / m) * std::exp(I * double(m) * ti);
      CHECK(std::abs(logsum - logref) < 1e-12 * (1.0 + std::abs(logref)));
      const cd href =
          (m == 0) ? cd(0.0) : 2.0 * M_PI * I * std::exp(I * double(m) * ti);
      CHECK(std::abs(hsum - href) < 1e-11 * (1.0 + std::abs(href)));
    }
  }
}

TEST_CASE("interior source: Dirichlet single layer reproduces the exact field") {
  Halfspace& hs = shared_hs();
  std::vector<Obstacle> obs;
  obs.push_back({make_curve("circle", {1.0}, {0.0, 10.0}), BcKind::dirichlet});
  NystromSystem sys(hs, obs, {96}, 12.0);

  const Point y_int{0.2, 9.9};  // source inside the obstacle
  const Vec2c q{0.8, -0.6};
  const int m = sys.size();
  Eigen::VectorXcd g(2 * m);
  for (int i = 0; i < m; ++i) {
    const Vec2c v = matvec(hs.neumann_bulk(sys.nodes()[i].x, y_int), q);
    g[2 * i] = v.v1;
    g[2 * i + 1] = v.v2;
  }
  const Eigen::VectorXcd phi = sys.solve(g);
  for (const Point xt : {Point{2.4, 10.8}, Point{-0.6, 12.6}, Point{3.0, 9.0}}) {
    const Vec2c got = sys.evaluate_bulk(xt, phi);
    const Vec2c want = matvec(hs.neumann_bulk(xt, y_int), q);
    CHECK(norm(got - want) < 2e-6 * norm(want));
  }
  // surface receiver path agrees too
  const Vec2c gs = sys.evaluate_surface(7.0, phi);
  const Vec2c ws = matvec(hs.neumann_surface(7.0 - y_int.x1, y_int.x2), q);
  CHECK(norm(gs - ws) < 2e-6 * norm(ws));
  CHECK(sys.condition_estimate() > 1.0);
}

TEST_CASE("off-surface traction extrapolation matches (-I/2 + K')") {
  // Exterior-limit jump relation: the traction of the single layer at
  // x + h nu tends to ((-1/2) I + K') phi as h -> 0+.  Build the data from
  // the extrapolated off-surface traction and check the solve returns phi.
  Halfspace& hs = shared_hs();
  std::vector<Obstacle> obs;
  obs.push_back({make_curve("circle", {1.0}, {0.0, 10.0}), BcKind::neumann});
  NystromSystem sys(hs, obs, {128}, 12.0);
  const int m = sys.size();

  Eigen::VectorXcd phi(2 * m);
  for (int j = 0; j < m; ++j) {
    const double t = sys.nodes()[j].t;
    phi[2 * j] = cd(std::cos(t), 0.3 * std::sin(2.0 * t));
    phi[2 * j + 1] = cd(std::sin(3.0 * t), -0.2);
  }

  const double h = 0.15;
  std::vector<Point> ys(m), xo(3 * m);
  for (int j = 0; j < m; ++j) ys[j] = sys.nodes()[j].x;
  for (int lev = 0; lev < 3; ++lev) {
    const double hh = h / (1 << lev);
    for (int i = 0; i < m; ++i) {
      const BoundaryNode& ni = sys.nodes()[i];
      xo[lev * m + i] = {ni.x.x1 + hh * ni.normal.x1,
                         ni.x.x2 + hh * ni.normal.x2};
    }
  }
  const std::vector<TensorJet> jets = neumann_jet_batch(hs, xo, ys, true);
  const double la = kMedium.lambda, mu = kMedium.mu;
  Eigen::VectorXcd rhs(2 * m);
  for (int i = 0; i < m; ++i) {
    const BoundaryNode& ni = sys.nodes()[i];
    auto tr_level = [&](int lev) {
      Vec2c acc;
      for (int j = 0; j < m; ++j) {
        const BoundaryNode& yj = sys.nodes()[j];
        const Tensor2C tr =
            traction_of_jet(jets[(lev * m + i) * m + j], ni.normal, la, mu);
        const Vec2c pj{phi[2 * j], phi[2 * j + 1]};
        acc = acc + (yj.w * yj.speed) * matvec(tr, pj);
      }
      return acc;
    };
    const Vec2c a = tr_level(0), b = tr_level(1), c = tr_level(2);
    const Vec2c ext = (1.0 / 3.0) * (8.0 * c - 6.0 * b + 1.0 * a);
    rhs[2 * i] = ext.v1;
    rhs[2 * i + 1] = ext.v2;
  }
  const Eigen::VectorXcd psi = sys.solve(rhs);
  double err = 0.0, scale = 0.0;
  for (int j = 0; j < 2 * m; ++j) {
    err = std::max(err, std::abs(psi[j] - phi[j]));
    scale = std::max(scale, std::abs(phi[j]));
  }
  CHECK(err < 2e-2 * scale);
}

TEST_CASE("interior source: Neumann and impedance systems reproduce the field") {
  Halfspace& hs = shared_hs();
  const Point y_int{-0.1, 10.1};
  const Vec2c q{1.0, 0.5};
  for (BcKind bc : {BcKind::neumann, BcKind::impedance}) {
    std::vector<Obstacle> obs;
    Obstacle o{make_curve("circle", {1.0}, {0.0, 10.0}), bc};
    if (bc == BcKind::impedance) o.eta = [](double) { return 1.0; };
    obs.push_back(o);
    NystromSystem sys(hs, obs, {96}, 12.0);
    const int m = sys.size();
    Eigen::VectorXcd g(2 * m);
    for (int i = 0; i < m; ++i) {
      const BoundaryNode& nd = sys.nodes()[i];
      const Tensor2C tr = hs.neumann_stress(nd.x, nd.normal, y_int);
      Vec2c v = matvec(tr, q);
      if (bc == BcKind::impedance)
        v = v + (I * nd.eta) * matvec(hs.neumann_bulk(nd.x, y_int), q);
      g[2 * i] = v.v1;
      g[2 * i + 1] = v.v2;
    }
    const Eigen::VectorXcd phi = sys.solve(g);
    for (const Point xt : {Point{2.4, 10.8}, Point{-2.8, 9.4}}) {
      const Vec2c got = sys.evaluate_bulk(xt, phi);
      const Vec2c want = matvec(hs.neumann_bulk(xt, y_int), q);
      CHECK(norm(got - want) < 2e-4 * norm(want));
    }
  }
}

TEST_CASE("noise model: determinism and moments") {
  ScatterDataSet ds;
  ds.survey = {50.0, 40, 40};
  ds.omega = 2.0 * M_PI;
  ds.data.assign(40 * 40 * 4, cd(0.3, -0.4));  // |u| = 0.5 everywhere

  const ScatterDataSet n0 = add_noise(ds, 0.0, 42);
  CHECK(n0.data == ds.data);  // bitwise identical

  const ScatterDataSet a = add_noise(ds, 0.2, 42);
  const ScatterDataSet b = add_noise(ds, 0.2, 42);
  CHECK(a.data == b.data);
  const ScatterDataSet c = add_noise(ds, 0.2, 43);
  CHECK(a.data != c.data);

  // sample mean of |nu|^2 = sigma^2 max|u|^2 over many entries
  double acc = 0.0;
  for (std::size_t i = 0; i < ds.data.size(); ++i)
    acc += std::norm(a.data[i] - ds.data[i]);
  acc /= static_cast<double>(ds.data.size());
  const double expect = 0.04 * 0.25;
  CHECK(std::abs(acc - expect) < 0.05 * expect);
}

TEST_CASE("dataset file round trip and version gate") {
  ScatterDataSet ds;
  ds.omega = 2.0 * M_PI;
  ds.lambda = 0.5;
  ds.mu = 0.25;
  ds.survey = {50.0, 2, 3};
  ds.obstacle_desc = "circle r=1 at (0,10) [dirichlet]";
  ds.seed = 7;
  ds.data.assign(2 * 3 * 4, cd{});
  for (std::size_t i = 0; i < ds.data.size(); ++i)
    ds.data[i] = cd(std::sin(0.1 * i) * 1e-3, std::cos(0.2 * i));
  const std::string path = "/tmp/hsrtm_test_dataset.txt";
  ds.write(path);
  const ScatterDataSet back = ScatterDataSet::read(path);
  CHECK(back.omega == ds.omega);
  CHECK(back.survey.n_src == 2);
  CHECK(back.survey.n_rcv == 3);
  CHECK(back.obstacle_desc == ds.obstacle_desc);
  CHECK(back.data == ds.data);

  // unknown version rejected
  {
    std::ofstream f("/tmp/hsrtm_bad_dataset.txt");
    f << "hsrtm-dataset 2\n";
  }
  CHECK_THROWS(ScatterDataSet::read("/tmp/hsrtm_bad_dataset.txt"));
}
