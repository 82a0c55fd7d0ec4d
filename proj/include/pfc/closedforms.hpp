#pragma once

#include <cstddef>

#include "pfc/function.hpp"
#include "pfc/params.hpp"
#include "pfc/specfun.hpp"

namespace pfc {

enum class RegisteredKind { exp_delta, cos_delta, sin_delta };

/// exp(delta t), cos(delta t) or sin(delta t) with delta > 0.
struct RegisteredFunction {
  RegisteredKind kind;
  double delta;

  /// Throws DomainError unless delta > 0 and finite.
  void validate() const;
  double operator()(double t) const;
  ScalarFunction as_function() const;
};

const char* kind_name(RegisteredKind kind);

/// |mu ln p| delta^(-beta), the asymptotic ratio of successive q-terms.
double closed_form_ratio(const RegisteredFunction& g, const PowerParams& pp);

/// Phi_q(t): exp(delta t), cos(delta t - beta q pi/2) or sin(delta t - beta q pi/2).
double closed_form_phase(const RegisteredFunction& g, double beta, std::size_t q, double t);

/// l-th order derivative in the Liouville sense,
///   (1/chi^l) Sum_q C(q+l-1, l-1) (-mu ln p)^q delta^(-beta q) Phi_q(t).
/// l = 0 returns g(t). Truncates before the first q >= 1 whose term bound
/// C(q+l-1, l-1) r^q / chi^l is below tol with the bound decreasing.
/// ConvergenceError when the ratio r is >= 1 or max_terms is reached.
SeriesResult lth_derivative_series(const RegisteredFunction& g, int l, const PowerParams& pp, double t, double tol,
                                   std::size_t max_terms = kDefaultSeriesCap);

/// Sum_{l=0}^{n} D^l g(0) W_l(t) with unit weight and base point 0.
double example_approximant(const RegisteredFunction& g, int n, const PowerParams& pp, double t, double tol,
                           std::size_t max_terms = kDefaultSeriesCap);

/// D^{N+1} g(lambda) W_{N+1}(t); lambda in [0, t].
double example_remainder(const RegisteredFunction& g, int N, const PowerParams& pp, double t, double lambda,
                         double tol, std::size_t max_terms = kDefaultSeriesCap);

}  // namespace pfc
