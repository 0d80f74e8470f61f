// Point spread functions of the half-space reverse-time-migration operator:
// the finite-aperture J_d (line integral of T_D^T conj(N) over the receiver
// window), the full-aperture J (principal-value spectral form with the
// Rayleigh residue bracket), and the propagating-mode core F (three finite
// band integrals), plus the resolution-profile sweep.
#ifndef HSRTM_PSF_HPP
#define HSRTM_PSF_HPP

#include <string>
#include <vector>

#include "hsrtm/halfspace.hpp"

namespace hsrtm {

struct PsfConfig {
  double aperture_d = 50.0;
  // imaging window Omega
  double x1_lo = -2.0, x1_hi = 2.0, x2_lo = 8.0, x2_hi = 12.0;
  int n1 = 41, n2 = 41;
  // stride for the (expensive) |J_d - F| grid; 0 disables it
  int jd_stride = 0;
  // window-assumption constants: max|x1| <= c1 d and diam(Omega) <= c2 h
  double c1 = 0.9, c2 = 10.0;
};

struct PsfReport {
  int n1 = 0, n2 = 0;
  double x1_lo = 0, dx1 = 0, x2_lo = 0, dx2 = 0;
  std::vector<double> im_f11, im_f22, abs_f;  // row-major, i2 major
  int jd_stride = 0;
  std::vector<double> jd_err;  // |J_d - F| on the strided grid (may be empty)
  double peak_value = 0.0;
  Point peak_location{};
  double background_median = 0.0;
  double halfwidth_x1 = 0.0, halfwidth_x2 = 0.0;
};

// F(z,y): propagating-mode point spread core.
Tensor2C psf_F(const Halfspace& hs, Point z, Point y);
// J(z,y): infinite-aperture point spread function (pv + residue bracket).
Tensor2C psf_J(const Halfspace& hs, Point z, Point y);
// J_d(z,y): finite-aperture point spread function over (-d, d).
Tensor2C psf_Jd(const Halfspace& hs, Point z, Point y, double d);

// Sweeps z over the grid with y fixed at the window centre.
PsfReport psf_resolution_profile(const Halfspace& hs, const PsfConfig& cfg);

// CSV grids ("z1,z2,value") plus a summary text file, into dir.
void write_psf_report(const PsfReport& rep, const std::string& dir);

}  // namespace hsrtm

#endif
