#include "hsrtm/nystrom.hpp"

#include "hsrtm/green_batch.hpp"

#include <cmath>
#include <stdexcept>

namespace hsrtm {

std::vector<double> kress_log_weights(int n_pts, double t) {
  if (n_pts % 2 != 0) throw std::invalid_argument("kress_log_weights: odd count");
  const int n = n_pts / 2;
  std::vector<double> w(n_pts);
  for (int j = 0; j < n_pts; ++j) {
    const double tj = M_PI * j / n;
    double acc = 0.0;
    for (int m = 1; m < n; ++m) acc += std::cos(m * (t - tj)) / m;
    w[j] = -(2.0 * M_PI / n) * acc - (M_PI / (n * n)) * std::cos(n * (t - tj));
  }
  return w;
}

std::vector<double> kress_log_weights_grid(int n_pts) {
  const int n = n_pts / 2;
  std::vector<double> w(n_pts);
  for (int k = 0; k < n_pts; ++k) {
    const double dt = M_PI * k / n;
    double acc = 0.0;
    for (int m = 1; m < n; ++m) acc += std::cos(m * dt) / m;
    w[k] = -(2.0 * M_PI / n) * acc - (M_PI / (n * n)) * std::cos(n * dt);
  }
  return w;
}

std::vector<double> hilbert_weights_grid(int n_pts) {
  const int n = n_pts / 2;
  std::vector<double> w(n_pts, 0.0);
  for (int k = 1; k < n_pts; ++k) {
    if (k % 2 == 0) continue;
    // weight for p.v. int cot((tau - t_i)/2) f(tau) dtau at offset
    // (j - i) = k: (pi/n) cot(k pi / (2n)) with the sign of the offset
    const double dt = M_PI * k / n;  // t_j - t_i
    w[k] = (M_PI / n) * (1.0 / std::tan(0.5 * dt));
  }
  return w;
}

NystromSystem::NystromSystem(const Halfspace& hs,
                             const std::vector<Obstacle>& obstacles,
                             const std::vector<int>& points_per_curve,
                             double max_offset)
    : hs_(&hs), obstacles_(obstacles), npts_(points_per_curve) {
  if (obstacles_.empty()) throw std::invalid_argument("NystromSystem: no obstacle");
  if (npts_.size() != obstacles_.size())
    throw std::invalid_argument("NystromSystem: point counts mismatch");
  bc_ = obstacles_.front().bc;
  for (const Obstacle& o : obstacles_)
    if (o.bc != bc_)
      throw std::invalid_argument(
          "NystromSystem: obstacles must share one boundary-condition kind");

  for (std::size_t c = 0; c < obstacles_.size(); ++c) {
    if (npts_[c] < 4 || npts_[c] % 2 != 0)
      throw std::invalid_argument("NystromSystem: need an even point count >= 4");
    offsets_.push_back(static_cast<int>(nodes_.size()));
    const BoundaryCurve& curve = obstacles_[c].curve;
    for (int j = 0; j < npts_[c]; ++j) {
      BoundaryNode nd;
      nd.curve = static_cast<int>(c);
      nd.t = 2.0 * M_PI * j / npts_[c];
      const CurveSample cs = curve.at(nd.t);
      nd.x = cs.x;
      nd.speed = norm(cs.d1);
      nd.tangent = {cs.d1.x1 / nd.speed, cs.d1.x2 / nd.speed};
      nd.normal = {cs.d1.x2 / nd.speed, -cs.d1.x1 / nd.speed};
      nd.w = 2.0 * M_PI / npts_[c];
      nd.eta = obstacles_[c].eta(nd.t);
      if (nd.eta < 0.0)
        throw std::invalid_argument("NystromSystem: impedance eta must be >= 0");
      nodes_.push_back(nd);
    }
  }

  // depth tables for the surface coupling (sources, receivers, RHS)
  tables_.resize(nodes_.size());
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < size(); ++j)
    tables_[j] = std::make_unique<SurfaceTable>(
        hs, SurfaceTable::Kind::neumann, nodes_[j].x.x2, max_offset);

  Eigen::MatrixXcd a(2 * size(), 2 * size());
  if (bc_ == BcKind::dirichlet)
    assemble_dirichlet(a);
  else
    assemble_second_kind(a);

  const double anorm = a.cwiseAbs().colwise().sum().maxCoeff();
  lu_.compute(a);
  // Hager-style 1-norm estimate of the inverse
  {
    const int m = 2 * size();
    Eigen::VectorXcd x = Eigen::VectorXcd::Constant(m, cd(1.0 / m, 0.0));
    double est = 0.0;
    for (int it = 0; it < 5; ++it) {
      const Eigen::VectorXcd y = lu_.solve(x);
      est = y.cwiseAbs().sum();
      Eigen::VectorXcd xi(m);
      for (int i = 0; i < m; ++i) {
        const double ay = std::abs(y[i]);
        xi[i] = ay > 0.0 ? y[i] / ay : cd(1.0, 0.0);
      }
      const Eigen::VectorXcd z = lu_.adjoint().solve(xi);
      int jmax = 0;
      z.cwiseAbs().maxCoeff(&jmax);
      const double zmax = std::abs(z[jmax]);
      if (zmax <= std::abs(z.dot(x))) break;
      x.setZero();
      x[jmax] = 1.0;
    }
    cond_ = anorm * est;
  }
}

Tensor2C NystromSystem::m1_log(const BoundaryNode& xi, const BoundaryNode& yj) const {
  const Fullspace& fs = hs_->fullspace();
  const Point rv = xi.x - yj.x;
  const double r = norm(rv);
  if (r == 0.0)
    return (0.5 * fs.a1_log(0.0) * yj.speed) * Tensor2C::identity();
  const Point rh{rv.x1 / r, rv.x2 / r};
  return (0.5 * yj.speed) *
         (fs.a1_log(r) * Tensor2C::identity() + fs.b1_log(r) * outer(rh, rh));
}

Tensor2C NystromSystem::m2_smooth(const BoundaryNode& xi, const BoundaryNode& yj) const {
  const Fullspace& fs = hs_->fullspace();
  const double lg = std::log(4.0 * std::pow(std::sin(0.5 * (xi.t - yj.t)), 2));
  return yj.speed * fs.green(xi.x, yj.x) - lg * m1_log(xi, yj);
}

Tensor2C NystromSystem::m2_diag(const BoundaryNode& nd) const {
  const Fullspace& fs = hs_->fullspace();
  const cd iso = fs.a_diag_limit() + fs.a1_log(0.0) * std::log(nd.speed);
  return nd.speed * (iso * Tensor2C::identity() +
                     fs.b_diag() * outer(nd.tangent, nd.tangent));
}

void NystromSystem::assemble_dirichlet(Eigen::MatrixXcd& a) const {
  const int m = size();
  std::vector<Point> pts(m);
  for (int i = 0; i < m; ++i) pts[i] = nodes_[i].x;
  const std::vector<Tensor2C> rem = neumann_value_batch(*hs_, pts, pts, false);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    const BoundaryNode& xi = nodes_[i];
    const std::vector<double> logw = kress_log_weights_grid(npts_[xi.curve]);
    for (int j = 0; j < m; ++j) {
      const BoundaryNode& yj = nodes_[j];
      Tensor2C block = (yj.w * yj.speed) * rem[i * m + j];
      if (xi.curve == yj.curve) {
        const int k = ((j - i) % npts_[xi.curve] + npts_[xi.curve]) %
                      npts_[xi.curve];
        const Tensor2C m2 = (i == j) ? m2_diag(xi) : m2_smooth(xi, yj);
        block += logw[k] * m1_log(xi, yj) + yj.w * m2;
      } else {
        block += (yj.w * yj.speed) * hs_->fullspace().green(xi.x, yj.x);
      }
      a(2 * i, 2 * j) = block.m11;
      a(2 * i, 2 * j + 1) = block.m12;
      a(2 * i + 1, 2 * j) = block.m21;
      a(2 * i + 1, 2 * j + 1) = block.m22;
    }
  }
}

void NystromSystem::assemble_second_kind(Eigen::MatrixXcd& a) const {
  const int m = size();
  const Fullspace& fs = hs_->fullspace();
  const double c1 = fs.c1(), c2 = fs.c2(), c4 = fs.c4();
  const double la_ = hs_->medium().lambda, mu_ = hs_->medium().mu;
  std::vector<Point> pts(m);
  for (int i = 0; i < m; ++i) pts[i] = nodes_[i].x;
  const std::vector<TensorJet> rem_jet = neumann_jet_batch(*hs_, pts, pts, false);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    const BoundaryNode& xi = nodes_[i];
    const std::vector<double> logw = kress_log_weights_grid(npts_[xi.curve]);
    const std::vector<double> hw = hilbert_weights_grid(npts_[xi.curve]);
    for (int j = 0; j < m; ++j) {
      const BoundaryNode& yj = nodes_[j];
      const Tensor2C rem_tr =
          traction_of_jet(rem_jet[i * m + j], xi.normal, la_, mu_);
      Tensor2C block;
      if (xi.curve == yj.curve) {
        const int np = npts_[xi.curve];
        const int k = ((j - i) % np + np) % np;
        // Cauchy coefficient (speed factors cancel against r_vec/r^2)
        const Tensor2C p =
            -0.5 * (c1 * outer(xi.normal, yj.tangent) +
                    c2 * outer(yj.tangent, xi.normal));
        Tensor2C q, rsm;
        if (i == j) {
          const CurveSample cs = obstacles_[xi.curve].curve.at(xi.t);
          const double s2 = xi.speed * xi.speed;
          const Point dvec{
              cs.d2.x1 / (2.0 * s2) -
                  cs.d1.x1 * dot(cs.d1, cs.d2) / (s2 * s2),
              cs.d2.x2 / (2.0 * s2) -
                  cs.d1.x2 * dot(cs.d1, cs.d2) / (s2 * s2)};
          const double kg = -dot(xi.normal, cs.d2) / (2.0 * s2);
          rsm = xi.speed *
                (c1 * outer(xi.normal, dvec) + c2 * outer(dvec, xi.normal) +
                 (c2 * kg) * Tensor2C::identity() +
                 (c4 * kg) * outer(xi.tangent, xi.tangent));
          q = Tensor2C{};  // log coefficient vanishes on the diagonal
        } else {
          const Point rv = xi.x - yj.x;
          const double r = norm(rv);
          const double ndr = dot(xi.normal, rv);
          q = (0.5 * yj.speed) *
              (fs.l1_over_r(r) * outer(xi.normal, rv) +
               fs.l2_over_r(r) * (outer(rv, xi.normal) + ndr * Tensor2C::identity()) +
               (fs.l4_over_r(r) * ndr / (r * r)) * outer(rv, rv));
          const double dt = yj.t - xi.t;
          const double ct = 1.0 / std::tan(0.5 * dt);
          const double lg = std::log(4.0 * std::pow(std::sin(0.5 * dt), 2));
          rsm = yj.speed * fs.traction(xi.x, xi.normal, yj.x) - ct * p - lg * q;
        }
        block = hw[k] * p + logw[k] * q + yj.w * rsm;
        block += (yj.w * yj.speed) * rem_tr;
      } else {
        block = (yj.w * yj.speed) *
                (fs.traction(xi.x, xi.normal, yj.x) + rem_tr);
      }
      if (bc_ == BcKind::impedance) {
        // + i eta(x_i) * single layer
        Tensor2C sl;
        if (xi.curve == yj.curve) {
          const int np = npts_[xi.curve];
          const int k = ((j - i) % np + np) % np;
          const Tensor2C m2 = (i == j) ? m2_diag(xi) : m2_smooth(xi, yj);
          sl = logw[k] * m1_log(xi, yj) + yj.w * m2;
          sl += (yj.w * yj.speed) * rem_jet[i * m + j][0];
        } else {
          sl = (yj.w * yj.speed) *
               (hs_->fullspace().green(xi.x, yj.x) + rem_jet[i * m + j][0]);
        }
        block += (I * xi.eta) * sl;
      }
      if (i == j) block -= 0.5 * Tensor2C::identity();
      a(2 * i, 2 * j) = block.m11;
      a(2 * i, 2 * j + 1) = block.m12;
      a(2 * i + 1, 2 * j) = block.m21;
      a(2 * i + 1, 2 * j + 1) = block.m22;
    }
  }
}

Eigen::VectorXcd NystromSystem::rhs_for_source(double xs1, Vec2c q) const {
  const int m = size();
  Eigen::VectorXcd b(2 * m);
  const double la = hs_->medium().lambda, mu = hs_->medium().mu;
  for (int i = 0; i < m; ++i) {
    const BoundaryNode& nd = nodes_[i];
    const double delta = xs1 - nd.x.x1;
    Vec2c rhs;
    if (bc_ == BcKind::dirichlet) {
      const Tensor2C ninc = transpose(tables_[i]->value(delta));
      rhs = matvec(ninc, q);
    } else {
      const TensorJet s = tables_[i]->jet(delta);
      TensorJet jet{transpose(s[0]), transpose(-1.0 * s[1]), transpose(s[2])};
      const Tensor2C tr = traction_of_jet(jet, nd.normal, la, mu);
      rhs = matvec(tr, q);
      if (bc_ == BcKind::impedance)
        rhs = rhs + (I * nd.eta) * matvec(jet[0], q);
    }
    b[2 * i] = -rhs.v1;
    b[2 * i + 1] = -rhs.v2;
  }
  return b;
}

Eigen::VectorXcd NystromSystem::solve(const Eigen::VectorXcd& rhs) const {
  return lu_.solve(rhs);
}

Tensor2C NystromSystem::surface_kernel(int j, double xr1) const {
  const BoundaryNode& nd = nodes_[j];
  return (nd.w * nd.speed) * tables_[j]->value(xr1 - nd.x.x1);
}

Vec2c NystromSystem::evaluate_surface(double xr1,
                                      const Eigen::VectorXcd& density) const {
  Vec2c out;
  for (int j = 0; j < size(); ++j) {
    const BoundaryNode& nd = nodes_[j];
    const Tensor2C ker = tables_[j]->value(xr1 - nd.x.x1);
    const Vec2c phi{density[2 * j], density[2 * j + 1]};
    out = out + (nd.w * nd.speed) * matvec(ker, phi);
  }
  return out;
}

Vec2c NystromSystem::evaluate_bulk(Point x, const Eigen::VectorXcd& density) const {
  Vec2c out;
  for (int j = 0; j < size(); ++j) {
    const BoundaryNode& nd = nodes_[j];
    const Tensor2C ker = hs_->neumann_bulk(x, nd.x);
    const Vec2c phi{density[2 * j], density[2 * j + 1]};
    out = out + (nd.w * nd.speed) * matvec(ker, phi);
  }
  return out;
}

Vec2c NystromSystem::single_layer_at(int ci, double t,
                                     const Eigen::VectorXcd& density) const {
  Vec2c out;
  const BoundaryCurve& curve = obstacles_[ci].curve;
  const CurveSample cs = curve.at(t);
  BoundaryNode xi;
  xi.curve = ci;
  xi.t = t;
  xi.x = cs.x;
  xi.speed = norm(cs.d1);
  xi.tangent = {cs.d1.x1 / xi.speed, cs.d1.x2 / xi.speed};
  xi.normal = {cs.d1.x2 / xi.speed, -cs.d1.x1 / xi.speed};
  const std::vector<double> logw = kress_log_weights(npts_[ci], t);
  for (int j = 0; j < size(); ++j) {
    const BoundaryNode& yj = nodes_[j];
    const Vec2c phi{density[2 * j], density[2 * j + 1]};
    Tensor2C block;
    if (yj.curve == ci) {
      const int local = j - offsets_[ci];
      block = logw[local] * m1_log(xi, yj) + yj.w * m2_smooth(xi, yj);
      block += (yj.w * yj.speed) * hs_->remainder(xi.x, yj.x);
    } else {
      block = (yj.w * yj.speed) * hs_->neumann_bulk(xi.x, yj.x);
    }
    out = out + matvec(block, phi);
  }
  return out;
}

double NystromSystem::boundary_residual(double xs1, Vec2c q,
                                        const Eigen::VectorXcd& density) const {
  if (bc_ != BcKind::dirichlet)
    throw std::logic_error("boundary_residual: implemented for Dirichlet");
  double worst = 0.0, scale = 0.0;
  for (std::size_t c = 0; c < obstacles_.size(); ++c) {
    const int np = npts_[c];
    for (int j = 0; j < np; ++j) {
      const double tm = 2.0 * M_PI * (j + 0.5) / np;
      const Point xm = obstacles_[c].curve.point(tm);
      const Vec2c got = single_layer_at(static_cast<int>(c), tm, density);
      const Tensor2C ninc = hs_->neumann_surface(xs1 - xm.x1, xm.x2);
      const Vec2c want = -1.0 * matvec(transpose(ninc), q);
      worst = std::max(worst, norm(got - want));
      scale = std::max(scale, norm(want));
    }
  }
  return worst / std::max(scale, 1e-300);
}

}  // namespace hsrtm
