#pragma once

#include <vector>

namespace scalemap {

/// Physical constants of a run. `masses` holds one entry per particle;
/// grid axes are grouped contiguously by particle, so for a grid with
/// `total_axes` axes and N particles each particle owns total_axes/N
/// consecutive axes.
struct PhysicalConstants {
  double hbar = 1.0;
  std::vector<double> masses = {1.0};

  /// Mass attached to a grid axis. A single mass broadcasts to every axis.
  double axis_mass(int axis, int total_axes) const;

  /// Per-axis mass vector of length `total_axes`.
  std::vector<double> axis_masses(int total_axes) const;

  /// Throws ValidationError unless hbar and all masses are positive and the
  /// particle count divides total_axes.
  void validate(int total_axes) const;
};

}  // namespace scalemap
