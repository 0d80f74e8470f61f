// Scattering-data synthesis: Nystrom solve of the boundary integral
// equations per source, evaluation at the surface receivers, deterministic
// complex Gaussian noise, and the self-describing dataset file format.
#ifndef HSRTM_FORWARD_HPP
#define HSRTM_FORWARD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hsrtm/curves.hpp"
#include "hsrtm/halfspace.hpp"

namespace hsrtm {

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScatterDataSet {
  double omega = 0.0, lambda = 0.0, mu = 0.0;
  SurveyGeometry survey;
  std::string obstacle_desc;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  // scattered field component c at receiver r for source s, polarization q
  std::vector<cd> data;  // index ((s * n_rcv + r) * 2 + q) * 2 + c

  std::size_t index(int s, int r, int q, int c) const {
    return ((static_cast<std::size_t>(s) * survey.n_rcv + r) * 2 + q) * 2 + c;
  }
  cd& at(int s, int r, int q, int c) { return data[index(s, r, q, c)]; }
  cd at(int s, int r, int q, int c) const { return data[index(s, r, q, c)]; }

  double max_abs() const;

  // text format, version-checked; 17 significant digits, atomic write
  void write(const std::string& path) const;
  static ScatterDataSet read(const std::string& path);
};

struct SynthesisOptions {
  int points_per_wavelength = 10;
  int min_points = 64;
  double cond_limit = 1e12;
};

// Even point count giving at least points_per_wavelength per shear
// wavelength along the curve.
int nystrom_points(const BoundaryCurve& curve, double ks,
                   const SynthesisOptions& opt);

ScatterDataSet synthesize_data(const Halfspace& hs,
                               const std::vector<Obstacle>& obstacles,
                               const SurveyGeometry& survey,
                               const SynthesisOptions& opt = {});

// Adds sigma * max|u| / sqrt(2) * (eps1 + i eps2) per entry with standard
// normal draws from a counter generator keyed by (seed, s, r, q, c);
// deterministic and order-independent.
ScatterDataSet add_noise(const ScatterDataSet& in, double sigma,
                         std::uint64_t seed);

// counter RNG used by the noise model (exposed for tests)
double gaussian_draw(std::uint64_t seed, std::uint64_t s, std::uint64_t r,
                     std::uint64_t q, std::uint64_t c, std::uint64_t salt);

}  // namespace hsrtm

#endif
