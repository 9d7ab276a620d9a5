#pragma once

#include <complex>
#include <vector>

#include "scalemap/grid.hpp"
#include "scalemap/numerics.hpp"

namespace scalemap {

/// Which member of the transformation chain a state represents.
///  - Original:     psi, evolving under the time-dependent scaling Hamiltonian;
///                  `time` is physical time t.
///  - Intermediate: the drift-frame state after the coordinate/time rescaling;
///                  `time` is the transformed clock t'.
///  - Dual:         the state evolving under the time-independent dual
///                  Hamiltonian; `time` is t'.
enum class Frame { Original, Intermediate, Dual };

struct Wavefunction {
  Grid grid;
  Frame frame = Frame::Original;
  double time = 0.0;
  std::vector<Complex> amp;  // row-major, size == grid.size()
};

std::string frame_name(Frame f);

/// Fresh zeroed state on `grid`.
Wavefunction make_wavefunction(const Grid& grid, Frame frame = Frame::Original, double time = 0.0);

/// dx^d * sum conj(a_j) b_j. Throws on grid or frame mismatch.
Complex inner_product(const Wavefunction& a, const Wavefunction& b);

/// Squared L2 norm, dx^d * sum |psi_j|^2.
double norm_squared(const Wavefunction& psi);

double norm(const Wavefunction& psi);

bool all_finite(const Wavefunction& psi);

/// sqrt(dx^d * sum |a_j - b_j|^2). Grids must match.
double l2_distance(const Wavefunction& a, const Wavefunction& b);

/// l2_distance(a, b) / norm(a).
double rel_l2_error(const Wavefunction& reference, const Wavefunction& candidate);

double max_abs(const Wavefunction& psi);

double max_abs_diff(const Wavefunction& a, const Wavefunction& b);

}  // namespace scalemap
