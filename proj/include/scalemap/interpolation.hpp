#pragma once

#include <vector>

#include "scalemap/wavefunction.hpp"

namespace scalemap {

/// Trigonometric (Fourier-series) interpolation of a periodic-grid state on a
/// tensor-product set of targets, one coordinate list per axis. Exact for
/// band-limited data represented on the grid. Targets must lie inside the
/// closed domain [x_min, x_max]; extrapolation and Dirichlet-offset grids are
/// rejected. Returns values in row-major order over the target tensor.
std::vector<Complex> interpolate_tensor(const Wavefunction& psi,
                                        const std::vector<std::vector<double>>& axis_targets);

/// Scattered-point variant; each target supplies one coordinate per axis.
std::vector<Complex> interpolate(const Wavefunction& psi,
                                 const std::vector<std::vector<double>>& points);

}  // namespace scalemap
