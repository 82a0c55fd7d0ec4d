#include "pfc/function.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pfc/errors.hpp"

namespace pfc {

double fallback_step(double t) { return std::max(1e-6, 1e-6 * std::fabs(t)); }

ScalarFunction::ScalarFunction(RealFn f, RealFn f_prime) : f_(std::move(f)), f_prime_(std::move(f_prime)) {}

double ScalarFunction::derivative(double t) const {
  if (f_prime_) return f_prime_(t);
  const double h = fallback_step(t);
  return (f_(t + h) - f_(t - h)) / (2.0 * h);
}

WeightFunction::WeightFunction() : unit_(true) {}

WeightFunction::WeightFunction(RealFn omega, RealFn omega_prime)
    : omega_(std::move(omega)), omega_prime_(std::move(omega_prime)) {}

double WeightFunction::value(double t) const {
  if (unit_) return 1.0;
  const double v = omega_(t);
  if (!(v > 0.0)) {
    throw DomainError("weight must be positive, omega(" + std::to_string(t) + ") = " + std::to_string(v));
  }
  return v;
}

double WeightFunction::derivative(double t) const {
  if (unit_) return 0.0;
  if (omega_prime_) return omega_prime_(t);
  const double h = fallback_step(t);
  return (omega_(t + h) - omega_(t - h)) / (2.0 * h);
}

double weighted_derivative(const ScalarFunction& f, const WeightFunction& w, double t) {
  if (w.is_unit()) return f.derivative(t);
  return w.derivative(t) * f(t) + w.value(t) * f.derivative(t);
}

ScalarFunction constant_function(double c) {
  return ScalarFunction([c](double) { return c; }, [](double) { return 0.0; });
}

ScalarFunction identity_function() {
  return ScalarFunction([](double t) { return t; }, [](double) { return 1.0; });
}

ScalarFunction square_function() {
  return ScalarFunction([](double t) { return t * t; }, [](double t) { return 2.0 * t; });
}

ScalarFunction sin_function(double delta) {
  return ScalarFunction([delta](double t) { return std::sin(delta * t); },
                        [delta](double t) { return delta * std::cos(delta * t); });
}

ScalarFunction cos_function(double delta) {
  return ScalarFunction([delta](double t) { return std::cos(delta * t); },
                        [delta](double t) { return -delta * std::sin(delta * t); });
}

ScalarFunction exp_function(double delta) {
  return ScalarFunction([delta](double t) { return std::exp(delta * t); },
                        [delta](double t) { return delta * std::exp(delta * t); });
}

WeightFunction exp_weight(double c) {
  return WeightFunction([c](double t) { return std::exp(-c * t); },
                        [c](double t) { return -c * std::exp(-c * t); });
}

WeightFunction quadratic_weight(double c) {
  return WeightFunction([c](double t) { return 1.0 + c * t * t; }, [c](double t) { return 2.0 * c * t; });
}

ScalarFunction linear_combination(double c1, const ScalarFunction& f, double c2, const ScalarFunction& g) {
  RealFn value = [=](double t) { return c1 * f(t) + c2 * g(t); };
  if (f.uses_derivative_fallback() || g.uses_derivative_fallback()) return ScalarFunction(value);
  return ScalarFunction(value, [=](double t) { return c1 * f.derivative(t) + c2 * g.derivative(t); });
}

}  // namespace pfc
