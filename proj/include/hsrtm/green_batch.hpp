// Batched evaluation of the bulk Neumann tensor over all pairs (x_i, y_j):
// on a fixed spectral grid the image-correction integrand separates into
// per-x and per-y exponential factors, so the whole pair matrix costs one
// pass over the grid per pair instead of one adaptive integral per pair.
// Used by the Nystrom assembly and validation sweeps.
#ifndef HSRTM_GREEN_BATCH_HPP
#define HSRTM_GREEN_BATCH_HPP

#include <vector>

#include "hsrtm/halfspace.hpp"

namespace hsrtm {

// Row-major pair results: out[i * ys.size() + j].
// include_direct = true adds the full-space part G(x,y) (and its gradient),
// giving the full Neumann tensor; otherwise the smooth remainder N - G.
std::vector<Tensor2C> neumann_value_batch(const Halfspace& hs,
                                          const std::vector<Point>& xs,
                                          const std::vector<Point>& ys,
                                          bool include_direct);
std::vector<TensorJet> neumann_jet_batch(const Halfspace& hs,
                                         const std::vector<Point>& xs,
                                         const std::vector<Point>& ys,
                                         bool include_direct);

}  // namespace hsrtm

#endif
