// Numerical integration kernels: adaptive Gauss-Kronrod 7-15 panels on a
// priority queue, Cauchy principal value integration by simple-pole
// subtraction, Sokhotski-Plemelj one-sided limits, and truncated real-axis
// integration for exponentially decaying spectral integrands.
//
// The adaptive engine is generic over the integrand value type (double,
// complex, Tensor2C) so tensor-valued spectral integrals run in one pass.
#ifndef HSRTM_QUADRATURE_HPP
#define HSRTM_QUADRATURE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsrtm/tensor.hpp"

namespace hsrtm {

struct ToleranceSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_panels = 20000;
};

struct PoleSpec {
  double location;
  cd residue_factor;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved error estimate " +
                           std::to_string(achieved) + ")"),
        achieved_error(achieved) {}
  double achieved_error;
};

// Norm used for error estimates; extended by other headers for their value
// types via ADL.
inline double quad_norm(double v) { return std::abs(v); }
inline double quad_norm(cd v) { return std::abs(v); }
inline double quad_norm(const Tensor2C& v) { return norm(v); }

namespace detail {

// 15-point Kronrod nodes on [-1,1] (symmetric; last is the center) and the
// matching Kronrod / embedded 7-point Gauss weights.
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kGK15WK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kG7W[4] = {0.129484966168870, 0.279705391489277,
                                   0.381830050505119, 0.417959183673469};

// One GK15 pass over [a,b]: returns the Kronrod value and |K15-G7| estimate.
template <class V, class F>
std::pair<V, double> gk15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  V ik{};
  V ig{};
  for (int i = 0; i < 7; ++i) {
    const V fp = f(c + h * kGK15Nodes[i]);
    const V fm = f(c - h * kGK15Nodes[i]);
    ik += kGK15WK[i] * (fp + fm);
    if (i % 2 == 1) ig += kG7W[i / 2] * (fp + fm);
  }
  const V fc = f(c);
  ik += kGK15WK[7] * fc;
  ig += kG7W[3] * fc;
  ik = h * ik;
  ig = h * ig;
  return {ik, quad_norm(ik - ig)};
}

}  // namespace detail

template <class V>
struct QuadResult {
  V value{};
  double error = 0.0;
  int panels = 0;
};

// Adaptive integration over the union of the initial panels given by
// `edges` (sorted, at least two entries).  Panels with the largest error
// estimate are bisected until the combined estimate meets tol or the panel
// budget is exhausted (which throws).  The final sum runs over panels in
// left-to-right order, so the result is independent of refinement history.
template <class V, class F>
QuadResult<V> adaptive_integrate(F&& f, std::vector<double> edges,
                                 const ToleranceSpec& tol) {
  if (edges.size() < 2) throw std::invalid_argument("adaptive_integrate: edges");
  std::sort(edges.begin(), edges.end());
  const double span = edges.back() - edges.front();
  const double min_width = 1e-9 * span;

  struct Panel {
    double a, b, err;
    V val;
  };
  std::vector<Panel> panels;
  panels.reserve(edges.size() + 256);
  V total{};
  double err_sum = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] <= edges[i]) continue;
    auto [v, e] = detail::gk15<V>(f, edges[i], edges[i + 1]);
    panels.push_back({edges[i], edges[i + 1], e, v});
    total += v;
    err_sum += e;
  }

  auto cmp = [&panels](std::size_t x, std::size_t y) {
    return panels[x].err < panels[y].err;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> heap(cmp);
  for (std::size_t i = 0; i < panels.size(); ++i) heap.push(i);

  auto finish = [&](double err) {
    std::vector<std::size_t> order(panels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return panels[x].a < panels[y].a;
    });
    V out{};
    for (std::size_t i : order) out += panels[i].val;
    return QuadResult<V>{out, err, static_cast<int>(panels.size())};
  };

  while (true) {
    const double goal =
        std::max(tol.abs_tol, tol.rel_tol * quad_norm(total));
    if (err_sum <= goal) return finish(err_sum);
    if (static_cast<int>(panels.size()) >= tol.max_panels)
      throw QuadratureError("adaptive_integrate: panel budget exhausted", err_sum);
    bool split = false;
    while (!heap.empty()) {
      const std::size_t idx = heap.top();
      heap.pop();
      if (panels[idx].b - panels[idx].a <= min_width)
        continue;  // unsplittable, its error stays in the total
      const double a = panels[idx].a, b = panels[idx].b;
      const double mid = 0.5 * (a + b);
      auto [vl, el] = detail::gk15<V>(f, a, mid);
      auto [vr, er] = detail::gk15<V>(f, mid, b);
      total += vl + vr - panels[idx].val;
      err_sum += el + er - panels[idx].err;
      panels[idx] = {a, mid, el, vl};
      panels.push_back({mid, b, er, vr});
      heap.push(idx);
      heap.push(panels.size() - 1);
      split = true;
      break;
    }
    if (!split) return finish(err_sum);  // everything at min width already
  }
}

template <class V, class F>
QuadResult<V> adaptive_integrate(F&& f, double a, double b,
                                 const ToleranceSpec& tol) {
  return adaptive_integrate<V>(std::forward<F>(f), std::vector<double>{a, b}, tol);
}

// Subdivide [a,b] (seeded with the mandatory splits that fall inside) until
// every panel is shorter than local_len(midpoint), respecting min_len.
std::vector<double> build_panel_edges(double a, double b,
                                      const std::vector<double>& splits,
                                      const std::function<double(double)>& local_len,
                                      double min_len);

// Multiplicative unit so scalar residues apply to the scalar value types.
template <class V>
V quad_one() = delete;
template <>
inline double quad_one<double>() { return 1.0; }
template <>
inline cd quad_one<cd>() { return cd(1.0, 0.0); }

// p.v. integral of f over [a,b] with the listed simple poles subtracted as
// residue_factor/(xi - xi0); the subtracted Cauchy kernels are integrated
// exactly (log), the smooth remainder adaptively.
template <class V, class F>
V pv_integrate(F&& f, double a, double b, const std::vector<PoleSpec>& poles,
               const ToleranceSpec& tol,
               const std::vector<double>& extra_splits = {}) {
  const double span = b - a;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (!(poles[i].location > a && poles[i].location < b))
      throw std::invalid_argument("pv_integrate: pole outside (a,b)");
    if (!std::isfinite(poles[i].location) ||
        !std::isfinite(std::abs(poles[i].residue_factor)))
      throw std::invalid_argument("pv_integrate: pole data not finite");
    for (std::size_t j = i + 1; j < poles.size(); ++j)
      if (std::abs(poles[i].location - poles[j].location) <=
          10.0 * std::numeric_limits<double>::epsilon() * span)
        throw std::invalid_argument("pv_integrate: poles not separated");
  }
  auto reg = [&](double x) {
    V v = f(x);
    for (const auto& p : poles)
      v += (-p.residue_factor / (x - p.location)) * quad_one<V>();
    return v;
  };
  std::vector<double> edges{a, b};
  for (const auto& p : poles) edges.push_back(p.location);
  for (double s : extra_splits)
    if (s > a && s < b) edges.push_back(s);
  V out = adaptive_integrate<V>(reg, edges, tol).value;
  for (const auto& p : poles)
    out += (p.residue_factor *
            std::log((b - p.location) / (p.location - a))) * quad_one<V>();
  return out;
}

// One-sided Sokhotski-Plemelj limit of int gamma(t)/(t - (t0 +- i0)) dt:
// p.v. integral plus +- i pi gamma(t0).
cd sokhotski_limit_check(const std::function<cd(double)>& gamma_fn, double a,
                         double b, double t0, int side,
                         const ToleranceSpec& tol = {});

// Integral over the truncated axis [-Xi, Xi] for integrands bounded by
// M exp(-c(|xi| - k_start)) outside |xi| > k_start.  Panels are seeded at
// the caller's split points and sized to a quarter oscillation of the
// fastest phase factor (rate = max |d phase / d xi|).
struct AxisSpec {
  double decay_rate;             // c > 0
  double decay_magnitude = 1.0;  // M
  double decay_start = 0.0;      // decay active for |xi| beyond this
  double osc_rate = 0.0;         // max phase rate, 0 = non-oscillatory
  std::vector<double> splits;    // mandatory panel boundaries (branch points)
};

double truncation_limit(const AxisSpec& spec, const ToleranceSpec& tol);

template <class V, class F>
QuadResult<V> truncated_axis_integrate(F&& f, const AxisSpec& spec,
                                       const ToleranceSpec& tol) {
  if (!(spec.decay_rate > 0.0))
    throw std::invalid_argument("truncated_axis_integrate: decay_rate <= 0");
  const double xi_max = truncation_limit(spec, tol);
  const double cap = 0.25 * xi_max;
  const double osc_len =
      spec.osc_rate > 0.0 ? M_PI / (2.0 * spec.osc_rate) : cap;
  auto len = [&](double) { return std::min(cap, osc_len); };
  std::vector<double> edges =
      build_panel_edges(-xi_max, xi_max, spec.splits, len, 1e-9 * xi_max);
  return adaptive_integrate<V>(std::forward<F>(f), edges, tol);
}

// --- special functions ------------------------------------------------------

// Complex exponential integral E1(z), principal branch (|arg z| < pi).
cd expint_e1(cd z);
// Sine and cosine integrals, x > 0.
double sin_integral(double x);
double cos_integral(double x);

// p.v. integral of e^{i delta xi} / (xi - pole) over [a, b], a < pole < b.
cd pv_phase_integral(double delta, double a, double b, double pole);
// p.v. integral of i xi e^{i delta xi} / (xi - pole) over [a, b].
cd pv_phase_integral_dxi(double delta, double a, double b, double pole);

}  // namespace hsrtm

#endif
