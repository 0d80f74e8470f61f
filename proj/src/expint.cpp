// Complex exponential integral E1 (power series + modified Lentz continued
// fraction) and the sine/cosine integrals derived from it on the imaginary
// axis: E1(ix) = -Ci(x) + i(Si(x) - pi/2) for x > 0.
#include <cmath>
#include <stdexcept>

#include "hsrtm/quadrature.hpp"

namespace hsrtm {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209;
}

cd expint_e1(cd z) {
  const double az = std::abs(z);
  if (az == 0.0) throw std::domain_error("expint_e1: z = 0");
  if (z.real() < 0.0 && std::abs(z.imag()) == 0.0)
    throw std::domain_error("expint_e1: branch cut on the negative real axis");

  if (az <= 8.0) {
    cd sum = 0.0;
    cd term = 1.0;
    for (int k = 1; k <= 120; ++k) {
      term *= -z / static_cast<double>(k);
      const cd add = -term / static_cast<double>(k);
      sum += add;
      if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return -kEulerGamma - std::log(z) + sum;
  }

  // Modified Lentz on the standard continued fraction for E1.
  const double fpmin = 1e-300;
  cd b = z + 1.0;
  cd c = 1.0 / fpmin;
  cd d = 1.0 / b;
  cd h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cd del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-z);
}

double sin_integral(double x) {
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  const double s = M_PI / 2.0 + expint_e1(cd(0.0, ax)).imag();
  return x > 0.0 ? s : -s;
}

double cos_integral(double x) {
  if (!(x > 0.0)) throw std::domain_error("cos_integral: requires x > 0");
  return -expint_e1(cd(0.0, x)).real();
}

}  // namespace hsrtm
