#pragma once

#include <cstddef>
#include <vector>

#include "pfc/function.hpp"

namespace pfc {

/// Piecewise-cubic interpolant through tabulated samples (x_i, y_i).
///
/// On each cell the interpolant is the cubic through the four nearest
/// samples (shifted inwards at the ends), so values are O(h^4) and
/// derivatives O(h^3) accurate for smooth data. Grids need not be uniform
/// but must be strictly increasing with at least four points.
class CubicInterpolant {
 public:
  CubicInterpolant(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;
  double derivative(double t) const;

  const std::vector<double>& abscissae() const { return x_; }
  const std::vector<double>& values() const { return y_; }

  /// Max |I_coarse(x_i) - y_i| over odd samples i, where I_coarse interpolates
  /// the even samples only. Estimates the interpolation error of the coarse grid.
  /// Infinite when fewer than 4 even samples exist.
  double halving_error_estimate() const;

  ScalarFunction as_function() const;

 private:
  std::size_t stencil_start(double t) const;

  std::vector<double> x_;
  std::vector<double> y_;
};

/// `points` equispaced abscissae on [lo, hi], both endpoints included.
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

}  // namespace pfc
