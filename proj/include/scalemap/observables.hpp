#pragma once

#include <vector>

#include "scalemap/constants.hpp"
#include "scalemap/wavefunction.hpp"

namespace scalemap {

struct Observables {
  double norm_sq = 0.0;
  std::vector<double> mean_x;  // per axis
  std::vector<double> mean_p;  // per axis, real part of the quadrature
  /// Largest imaginary residue of the <p> quadratures, a discretization
  /// diagnostic; exactly zero in the continuum.
  double p_imag_residual = 0.0;
};

/// Norm, mean position (quadrature) and mean momentum (spectral derivative on
/// periodic axes, centered stencil on offset axes) of a state.
Observables compute_observables(const Wavefunction& psi, const PhysicalConstants& constants);

}  // namespace scalemap
