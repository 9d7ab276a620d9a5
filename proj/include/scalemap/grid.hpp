#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace scalemap {

/// Boundary treatment of every axis of a grid.
///  - Periodic: points x_j = x_min + j*dx, j = 0..n-1; x_max is excluded
///    (it aliases x_min on the ring). Spectral operators apply.
///  - DirichletOffset: cell-centered points x_j = x_min + (j+1/2)*dx. No
///    point ever equals 0, which keeps singular potentials finite; the
///    wavefunction is taken to vanish half a cell outside the domain.
enum class Topology { Periodic, DirichletOffset };

struct AxisSpec {
  int n = 0;
  double x_min = 0.0;
  double x_max = 0.0;

  bool operator==(const AxisSpec&) const = default;
};

/// Uniform tensor-product spatial lattice. Value type; point coordinates are
/// recomputed from the stored fields, so they are bit-stable across calls.
class Grid {
 public:
  Grid() = default;

  int dims() const { return static_cast<int>(axes_.size()); }
  std::size_t size() const { return size_; }
  Topology topology() const { return topology_; }
  const AxisSpec& axis(int a) const { return axes_[static_cast<std::size_t>(a)]; }

  double length(int a) const { return axis(a).x_max - axis(a).x_min; }
  double spacing(int a) const { return length(a) / axis(a).n; }

  /// Coordinate of point j on axis a.
  double point(int a, int j) const {
    const AxisSpec& ax = axis(a);
    const double offset = topology_ == Topology::DirichletOffset ? 0.5 : 0.0;
    return ax.x_min + (j + offset) * spacing(a);
  }

  std::vector<double> axis_points(int a) const;

  /// Product of the per-axis spacings (quadrature weight of one cell).
  double cell_volume() const;

  /// Row-major stride of axis a (axis 0 is slowest).
  std::size_t stride(int a) const { return strides_[static_cast<std::size_t>(a)]; }

  /// Index of point j along axis a for the flattened row-major index `flat`.
  int axis_index(std::size_t flat, int a) const {
    return static_cast<int>((flat / stride(a)) % static_cast<std::size_t>(axis(a).n));
  }

  /// Coordinate along axis a of the flattened point `flat`.
  double coordinate(std::size_t flat, int a) const { return point(a, axis_index(flat, a)); }

  bool operator==(const Grid&) const = default;

  friend Grid make_grid(std::vector<AxisSpec> axes, Topology topology);

 private:
  std::vector<AxisSpec> axes_;
  Topology topology_ = Topology::Periodic;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Builds a grid, validating extents and point counts (n >= 8 per axis,
/// x_max > x_min). All axes share one topology; mixing spectral and offset
/// axes in one lattice is rejected at the configuration layer.
Grid make_grid(std::vector<AxisSpec> axes, Topology topology);

std::string topology_name(Topology t);

}  // namespace scalemap
