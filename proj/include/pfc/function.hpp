#pragma once

#include <functional>
#include <optional>

namespace pfc {

using RealFn = std::function<double(double)>;

/// Step of the central-difference fallback at t: max(1e-6, 1e-6 |t|).
double fallback_step(double t);

/// Real function of one real variable with an optional analytic derivative.
/// Without one, derivative() uses a central difference and
/// uses_derivative_fallback() reports it.
class ScalarFunction {
 public:
  ScalarFunction() = default;
  explicit ScalarFunction(RealFn f, RealFn f_prime = {});

  double operator()(double t) const { return f_(t); }
  double derivative(double t) const;

  bool uses_derivative_fallback() const { return !f_prime_; }
  bool empty() const { return !f_; }

 private:
  RealFn f_;
  RealFn f_prime_;
};

/// Positive weight omega with derivative omega'.
/// Every evaluation through value() checks omega > 0 and throws DomainError otherwise.
class WeightFunction {
 public:
  /// omega == 1.
  WeightFunction();
  explicit WeightFunction(RealFn omega, RealFn omega_prime = {});

  double value(double t) const;
  double derivative(double t) const;

  bool is_unit() const { return unit_; }
  bool uses_derivative_fallback() const { return !unit_ && !omega_prime_; }

  static WeightFunction unit() { return WeightFunction(); }

 private:
  RealFn omega_;
  RealFn omega_prime_;
  bool unit_ = false;
};

/// t -> (omega f)'(t) = omega'(t) f(t) + omega(t) f'(t).
double weighted_derivative(const ScalarFunction& f, const WeightFunction& w, double t);

// Common test and CLI functions with analytic derivatives.
ScalarFunction constant_function(double c);
ScalarFunction identity_function();
ScalarFunction square_function();
ScalarFunction sin_function(double delta = 1.0);
ScalarFunction cos_function(double delta = 1.0);
ScalarFunction exp_function(double delta = 1.0);

/// omega(t) = exp(-c t).
WeightFunction exp_weight(double c);
/// omega(t) = 1 + c t^2.
WeightFunction quadratic_weight(double c);

/// c1 f + c2 g, derivative included when both have one.
ScalarFunction linear_combination(double c1, const ScalarFunction& f, double c2, const ScalarFunction& g);

}  // namespace pfc
