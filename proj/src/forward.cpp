#include "hsrtm/forward.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hsrtm/nystrom.hpp"

namespace hsrtm {

double ScatterDataSet::max_abs() const {
  double m = 0.0;
  for (const cd& v : data) m = std::max(m, std::abs(v));
  return m;
}

void ScatterDataSet::write(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::FILE* f = std::fopen(tmp.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open " + tmp);
    std::fprintf(f, "hsrtm-dataset 1\n");
    std::fprintf(f, "omega %.17g\n", omega);
    std::fprintf(f, "lambda %.17g\n", lambda);
    std::fprintf(f, "mu %.17g\n", mu);
    std::fprintf(f, "d %.17g\n", survey.d);
    std::fprintf(f, "n_src %d\n", survey.n_src);
    std::fprintf(f, "n_rcv %d\n", survey.n_rcv);
    std::fprintf(f, "obstacle %s\n", obstacle_desc.c_str());
    std::fprintf(f, "sigma %.17g\n", sigma);
    std::fprintf(f, "seed %" PRIu64 "\n", seed);
    std::fprintf(f, "data\n");
    for (int s = 0; s < survey.n_src; ++s)
      for (int r = 0; r < survey.n_rcv; ++r)
        for (int q = 0; q < 2; ++q)
          for (int c = 0; c < 2; ++c) {
            const cd v = at(s, r, q, c);
            std::fprintf(f, "%d %d %d %d %.17g %.17g\n", s, r, q, c, v.real(),
                         v.imag());
          }
    std::fclose(f);
  }
  std::filesystem::rename(tmp, path);
}

ScatterDataSet ScatterDataSet::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != "hsrtm-dataset" || version != 1)
    throw std::runtime_error("unsupported dataset format in " + path);
  ScatterDataSet ds;
  std::string key;
  while (in >> key) {
    if (key == "omega") in >> ds.omega;
    else if (key == "lambda") in >> ds.lambda;
    else if (key == "mu") in >> ds.mu;
    else if (key == "d") in >> ds.survey.d;
    else if (key == "n_src") in >> ds.survey.n_src;
    else if (key == "n_rcv") in >> ds.survey.n_rcv;
    else if (key == "obstacle") std::getline(in >> std::ws, ds.obstacle_desc);
    else if (key == "sigma") in >> ds.sigma;
    else if (key == "seed") in >> ds.seed;
    else if (key == "data") break;
    else throw std::runtime_error("unknown dataset header key '" + key + "'");
  }
  const std::size_t n =
      static_cast<std::size_t>(ds.survey.n_src) * ds.survey.n_rcv * 4;
  ds.data.assign(n, cd{});
  int s, r, q, c;
  double re, im;
  std::size_t count = 0;
  while (in >> s >> r >> q >> c >> re >> im) {
    ds.at(s, r, q, c) = cd(re, im);
    ++count;
  }
  if (count != n) throw std::runtime_error("dataset row count mismatch");
  return ds;
}

int nystrom_points(const BoundaryCurve& curve, double ks,
                   const SynthesisOptions& opt) {
  const double lam_s = 2.0 * M_PI / ks;
  int n = static_cast<int>(
      std::ceil(opt.points_per_wavelength * curve.length() / lam_s));
  n = std::max(n, opt.min_points);
  if (n % 2 != 0) ++n;
  return n;
}

ScatterDataSet synthesize_data(const Halfspace& hs,
                               const std::vector<Obstacle>& obstacles,
                               const SurveyGeometry& survey,
                               const SynthesisOptions& opt) {
  const double ks = hs.wavenumbers().ks;
  std::vector<int> npts;
  double span = 0.0;
  for (const Obstacle& o : obstacles) {
    npts.push_back(nystrom_points(o.curve, ks, opt));
    for (int i = 0; i < 64; ++i)
      span = std::max(span, std::abs(o.curve.point(2.0 * M_PI * i / 64).x1));
  }
  NystromSystem sys(hs, obstacles, npts, survey.d + span + 2.0);
  if (sys.condition_estimate() > opt.cond_limit)
    throw NumericalError(
        "boundary system nearly singular (interior resonance?); "
        "condition estimate " +
        std::to_string(sys.condition_estimate()) +
        " - consider perturbing omega by 0.1%");

  ScatterDataSet ds;
  ds.omega = hs.medium().omega;
  ds.lambda = hs.medium().lambda;
  ds.mu = hs.medium().mu;
  ds.survey = survey;
  {
    std::ostringstream desc;
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
      if (i) desc << " + ";
      desc << obstacles[i].curve.descriptor() << " ["
           << to_string(obstacles[i].bc) << "]";
    }
    ds.obstacle_desc = desc.str();
  }
  ds.data.assign(static_cast<std::size_t>(survey.n_src) * survey.n_rcv * 4, cd{});

  const std::vector<double> xs = survey.source_positions();
  const std::vector<double> xr = survey.receiver_positions();

  // receiver kernel rows are source-independent: precompute them once and
  // reuse across all sources and polarizations
  const int m = sys.size();
  std::vector<Tensor2C> rker(static_cast<std::size_t>(survey.n_rcv) * m);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < survey.n_rcv; ++r)
    for (int j = 0; j < m; ++j)
      rker[static_cast<std::size_t>(r) * m + j] = sys.surface_kernel(j, xr[r]);

#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < survey.n_src; ++s) {
    for (int q = 0; q < 2; ++q) {
      const Vec2c pol = (q == 0) ? Vec2c{1.0, 0.0} : Vec2c{0.0, 1.0};
      const Eigen::VectorXcd rhs = sys.rhs_for_source(xs[s], pol);
      const Eigen::VectorXcd density = sys.solve(rhs);
      for (int r = 0; r < survey.n_rcv; ++r) {
        Vec2c u;
        for (int j = 0; j < m; ++j) {
          const Vec2c phi{density[2 * j], density[2 * j + 1]};
          u = u + matvec(rker[static_cast<std::size_t>(r) * m + j], phi);
        }
        ds.at(s, r, q, 0) = u.v1;
        ds.at(s, r, q, 1) = u.v2;
      }
    }
  }
  return ds;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}
double uniform01(std::uint64_t h) {
  return (static_cast<double>(h >> 11) + 0.5) / 9007199254740992.0;
}
}  // namespace

double gaussian_draw(std::uint64_t seed, std::uint64_t s, std::uint64_t r,
                     std::uint64_t q, std::uint64_t c, std::uint64_t salt) {
  std::uint64_t h = seed;
  for (std::uint64_t v : {s, r, q, c, salt}) h = splitmix64(h ^ v);
  const double u1 = uniform01(h);
  const double u2 = uniform01(splitmix64(h));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

ScatterDataSet add_noise(const ScatterDataSet& in, double sigma,
                         std::uint64_t seed) {
  if (sigma < 0.0) throw std::invalid_argument("add_noise: sigma < 0");
  ScatterDataSet out = in;
  out.sigma = sigma;
  out.seed = seed;
  if (sigma == 0.0) return out;
  const double amp = sigma * in.max_abs() / std::sqrt(2.0);
  for (int s = 0; s < in.survey.n_src; ++s)
    for (int r = 0; r < in.survey.n_rcv; ++r)
      for (int q = 0; q < 2; ++q)
        for (int c = 0; c < 2; ++c) {
          const double e1 = gaussian_draw(seed, s, r, q, c, 0x5151);
          const double e2 = gaussian_draw(seed, s, r, q, c, 0xA2A2);
          out.at(s, r, q, c) += amp * cd(e1, e2);
        }
  return out;
}

}  // namespace hsrtm
