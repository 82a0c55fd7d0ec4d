#include "pfc/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "pfc/errors.hpp"

namespace pfc {
namespace {

struct Cubic {
  double value;
  double slope;
};

// Lagrange cubic through (xs[k], ys[k]), k = 0..3, evaluated at t.
Cubic lagrange4(const double* xs, const double* ys, double t) {
  double value = 0.0;
  double slope = 0.0;
  for (int k = 0; k < 4; ++k) {
    double num = 1.0;
    double den = 1.0;
    double dnum = 0.0;
    for (int j = 0; j < 4; ++j) {
      if (j == k) continue;
      den *= xs[k] - xs[j];
      dnum = dnum * (t - xs[j]) + num;
      num *= t - xs[j];
    }
    value += ys[k] * num / den;
    slope += ys[k] * dnum / den;
  }
  return {value, slope};
}

}  // namespace

CubicInterpolant::CubicInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size()) throw DomainError("interpolant needs as many values as abscissae");
  if (x_.size() < 4) throw DomainError("cubic interpolant needs at least four samples");
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (!(x_[i] > x_[i - 1])) throw DomainError("interpolation abscissae must be strictly increasing");
  }
}

std::size_t CubicInterpolant::stencil_start(double t) const {
  // Cell [x_c, x_{c+1}] containing t, clamped to the grid.
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  std::size_t cell = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  cell = std::min(cell, x_.size() - 2);
  const std::size_t start = cell == 0 ? 0 : cell - 1;
  return std::min(start, x_.size() - 4);
}

double CubicInterpolant::operator()(double t) const {
  const std::size_t s = stencil_start(t);
  return lagrange4(&x_[s], &y_[s], t).value;
}

double CubicInterpolant::derivative(double t) const {
  const std::size_t s = stencil_start(t);
  return lagrange4(&x_[s], &y_[s], t).slope;
}

double CubicInterpolant::halving_error_estimate() const {
  std::vector<double> xc;
  std::vector<double> yc;
  for (std::size_t i = 0; i < x_.size(); i += 2) {
    xc.push_back(x_[i]);
    yc.push_back(y_[i]);
  }
  // Too few points to say anything; report unresolved rather than exact.
  if (xc.size() < 4) return INFINITY;
  const CubicInterpolant coarse(std::move(xc), std::move(yc));
  double worst = 0.0;
  for (std::size_t i = 1; i < x_.size(); i += 2) {
    worst = std::max(worst, std::fabs(coarse(x_[i]) - y_[i]));
  }
  return worst;
}

ScalarFunction CubicInterpolant::as_function() const {
  auto self = std::make_shared<const CubicInterpolant>(*this);
  return ScalarFunction([self](double t) { return (*self)(t); },
                        [self](double t) { return self->derivative(t); });
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2) throw DomainError("a grid needs at least two points");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

}  // namespace pfc
