#pragma once

#include <memory>
#include <vector>

#include "scalemap/grid.hpp"
#include "scalemap/numerics.hpp"
#include "scalemap/wavefunction.hpp"

namespace scalemap {

/// Unnormalized multi-dimensional DFT pair for one lattice shape, backed by
/// FFTW (FFTW_ESTIMATE, so planning is deterministic). Plans are cached per
/// shape for the lifetime of the process; execution is thread-safe on
/// distinct arrays.
class SpectralTransform {
 public:
  explicit SpectralTransform(const Grid& grid);

  /// out_m = sum_j in_j exp(-2*pi*i m.j/n), row-major.
  void forward(const Complex* in, Complex* out) const;
  /// out_j = sum_m in_m exp(+2*pi*i m.j/n), no 1/N factor.
  void backward(const Complex* in, Complex* out) const;

  std::size_t size() const { return size_; }

 private:
  struct Plans;
  std::shared_ptr<const Plans> plans_;
  std::size_t size_ = 0;
};

/// Signed mode number s(m) in [-n/2, n/2): m for m < n/2, m - n otherwise.
int signed_mode(int m, int n);

/// Wavenumber 2*pi*s(m)/L used for even powers (kinetic energy); the Nyquist
/// mode keeps its full magnitude.
std::vector<double> wavenumbers(const Grid& grid, int axis);

/// Wavenumbers for odd derivatives: identical to `wavenumbers` except the
/// Nyquist mode is zeroed, which keeps first derivatives of real data real.
std::vector<double> derivative_wavenumbers(const Grid& grid, int axis);

/// Forward-normalized spectrum c_m = (1/N) sum_j psi_j exp(-2 pi i m.j/n).
std::vector<Complex> spectral_coefficients(const Wavefunction& psi);

/// -i hbar d/dx_axis by spectral differentiation (periodic grids only).
Wavefunction spectral_momentum(const Wavefunction& psi, int axis, double hbar);

/// Volume * sum_m |c_m|^2, the spectral-side Parseval norm.
double spectral_norm_squared(const Wavefunction& psi);

}  // namespace scalemap
