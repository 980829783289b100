#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gabor {

using Complex = std::complex<double>;

/// Uniform grid start, start + step, ..., start + (size - 1) * step.
struct UniformGrid {
  double start = 0.0;
  double step = 0.0;
  std::size_t size = 0;

  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  double end() const { return at(size - 1); }

  /// Symmetric grid over [-half_width, half_width] with the given spacing.
  /// The spacing is shrunk slightly if needed so that both ends are nodes.
  static UniformGrid symmetric(double half_width, double max_step);
};

/// Complex samples on a uniform grid. Linear interpolation between nodes,
/// zero outside the grid.
struct SampledFunction {
  UniformGrid grid;
  std::vector<Complex> values;

  Complex at(double t) const;
  double max_abs() const;
  /// Trapezoid approximation of the L2 norm.
  double l2_norm() const;
  /// True if the grid is symmetric about zero within rounding.
  bool symmetric() const;
};

}  // namespace gabor
