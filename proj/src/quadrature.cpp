#include "hsrtm/quadrature.hpp"

#include <cmath>

namespace hsrtm {

std::vector<double> build_panel_edges(double a, double b,
                                      const std::vector<double>& splits,
                                      const std::function<double(double)>& local_len,
                                      double min_len) {
  std::vector<double> seed{a, b};
  for (double s : splits)
    if (s > a && s < b) seed.push_back(s);
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());

  std::vector<double> out;
  out.push_back(seed.front());
  for (std::size_t i = 0; i + 1 < seed.size(); ++i) {
    // Bisect each seeded interval until the local length criterion holds.
    std::vector<std::pair<double, double>> stack{{seed[i], seed[i + 1]}};
    std::vector<double> interior;
    while (!stack.empty()) {
      auto [lo, hi] = stack.back();
      stack.pop_back();
      const double len = hi - lo;
      // Sample the criterion at the edges too: it can blow up at a panel
      // edge (branch point) while staying tame at the midpoint.
      const double want = std::min({local_len(lo), local_len(0.5 * (lo + hi)),
                                    local_len(hi)});
      if (len <= min_len || len <= want) {
        interior.push_back(hi);
        continue;
      }
      const double mid = 0.5 * (lo + hi);
      stack.push_back({mid, hi});
      stack.push_back({lo, mid});
    }
    std::sort(interior.begin(), interior.end());
    out.insert(out.end(), interior.begin(), interior.end());
  }
  return out;
}

cd sokhotski_limit_check(const std::function<cd(double)>& gamma_fn, double a,
                         double b, double t0, int side,
                         const ToleranceSpec& tol) {
  const cd g0 = gamma_fn(t0);
  auto f = [&](double t) { return gamma_fn(t) / (t - t0); };
  const cd pv = pv_integrate<cd>(f, a, b, {{t0, g0}}, tol);
  const double s = side >= 0 ? 1.0 : -1.0;
  return pv + s * cd(0.0, M_PI) * g0;
}

double truncation_limit(const AxisSpec& spec, const ToleranceSpec& tol) {
  const double m = std::max(spec.decay_magnitude, 1e-300);
  const double t = std::max(10.0, -std::log(tol.abs_tol / m));
  return spec.decay_start + t / spec.decay_rate;
}

cd pv_phase_integral(double delta, double a, double b, double pole) {
  if (!(a < pole && pole < b))
    throw std::invalid_argument("pv_phase_integral: pole outside (a,b)");
  const double A = pole - a, B = b - pole;
  if (delta == 0.0) return cd(std::log(B / A), 0.0);
  const double ad = std::abs(delta);
  const double re = cos_integral(ad * B) - cos_integral(ad * A);
  const double im =
      (delta > 0.0 ? 1.0 : -1.0) * (sin_integral(ad * B) + sin_integral(ad * A));
  return std::exp(cd(0.0, delta * pole)) * cd(re, im);
}

cd pv_phase_integral_dxi(double delta, double a, double b, double pole) {
  // i xi/(xi-p) = i + i p/(xi-p)
  cd plain;  // integral of i e^{i delta xi} over [a,b]
  if (delta == 0.0)
    plain = cd(0.0, b - a);
  else
    plain = (std::exp(cd(0.0, delta * b)) - std::exp(cd(0.0, delta * a))) / delta;
  return plain + cd(0.0, pole) * pv_phase_integral(delta, a, b, pole);
}

}  // namespace hsrtm
