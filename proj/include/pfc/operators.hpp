#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pfc/function.hpp"
#include "pfc/interpolation.hpp"
#include "pfc/params.hpp"
#include "pfc/quadrature.hpp"
#include "pfc/specfun.hpp"

namespace pfc {

/// Default truncation tolerance of the derivative kernel series.
inline constexpr double kDefaultKernelTol = 1e-15;

/// Weighted Riemann-Liouville integral with lower limit a:
///   (1 / Gamma(order)) (1 / omega(t)) int_a^t (t - tau)^(order-1) omega(tau) f(tau) dtau.
/// Order 0 is the identity. Returns 0 at t = a without quadrature.
class RiemannLiouvilleIntegral {
 public:
  RiemannLiouvilleIntegral(WeightFunction w, double a, const QuadratureConfig& q = {});

  double operator()(const ScalarFunction& f, double order, double t) const;

 private:
  WeightFunction w_;
  double a_;
  bool substitute_;
  CompositeRule rule_;
};

double rl_integral(const ScalarFunction& f, const WeightFunction& w, double order, double a, double t,
                   const QuadratureConfig& q = {});

/// Power fractional derivative (Caputo sense, weight omega) evaluated by
/// quadrature of the nonsingular kernel pE_{beta,1}(-mu (t - tau)^beta):
///   (1 / chi) (1 / omega(t)) int_a^t pE_{beta,1}(-mu (t-tau)^beta) (omega f)'(tau) dtau.
/// Holds a kernel-coefficient cache; evaluate from one thread at a time.
class PowerFractionalDerivative {
 public:
  PowerFractionalDerivative(ScalarFunction f, const PowerParams& pp, WeightFunction w, double a,
                            const QuadratureConfig& q = {}, double tol = kDefaultKernelTol);

  double operator()(double t);

 private:
  ScalarFunction f_;
  PowerParams pp_;
  WeightFunction w_;
  double a_;
  double tol_;
  CompositeRule rule_;
  PowerMittagLeffler kernel_;
};

double pfd_quadrature(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
                      const QuadratureConfig& q = {}, double tol = kDefaultKernelTol);

/// The derivative as the series
///   (1/chi) Sum_n (-mu ln p)^n RL^{beta n + 1}[(omega f)'/omega](t),
/// truncated once a bound on the term magnitude drops below tol while the
/// term envelope is decreasing. ConvergenceError when max_terms is reached first.
SeriesResult pfd_series(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
                        const QuadratureConfig& q = {}, double tol = kDefaultKernelTol,
                        std::size_t max_terms = kDefaultSeriesCap);

/// Power fractional integral chi f(t) + ln p phi RL^beta[f](t).
double pfi(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
           const QuadratureConfig& q = {});

/// n-fold power fractional integral through the binomial expansion
///   Sum_m C(n,m) chi^(n-m) (ln p phi)^m RL^{m beta}[f](t).
double iterated_pfi(const ScalarFunction& f, int n, const PowerParams& pp, const WeightFunction& w, double a,
                    double t, const QuadratureConfig& q = {});

struct IteratedConfig {
  /// Grid intervals per unit length of [a, t] for the tabulated levels.
  double grid_density = 2048.0;
  std::size_t min_intervals = 16;
  /// ResolutionError when a level's grid-halving interpolation estimate exceeds this.
  double resolution_tol = 1e-6;
};

/// n-fold composition of the power fractional derivative on [a, t_max].
///
/// Levels 1..n-1 are sampled on a uniform grid and carried to the next level
/// as piecewise-cubic interpolants (whose derivative feeds (omega D)'). The
/// top level is evaluated by quadrature at each query point.
class IteratedDerivative {
 public:
  IteratedDerivative(const ScalarFunction& f, int order, const PowerParams& pp, const WeightFunction& w, double a,
                     double t_max, const QuadratureConfig& q = {}, double tol = kDefaultKernelTol,
                     const IteratedConfig& config = {});

  /// D^order f(t) for t in [a, t_max].
  double operator()(double t);

  /// Level k < order as a function: f itself for k = 0, an interpolant otherwise.
  const ScalarFunction& level(int k) const;
  int order() const { return order_; }
  /// Largest grid-halving estimate over the tabulated levels (0 when none).
  double resolution_estimate() const { return resolution_estimate_; }

 private:
  int order_;
  double a_;
  double t_max_;
  std::vector<ScalarFunction> levels_;
  std::optional<PowerFractionalDerivative> top_;
  double resolution_estimate_ = 0.0;
};

double iterated_pfd(const ScalarFunction& f, int n, const PowerParams& pp, const WeightFunction& w, double a,
                    double t, const QuadratureConfig& q = {}, double tol = kDefaultKernelTol,
                    const IteratedConfig& config = {});

/// pI(pD f)(t) - [f(t) - omega(a) f(a) / omega(t)], with the inner derivative
/// evaluated by quadrature at every node of the outer integral.
double compose_identity_residual(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a,
                                 double t, const QuadratureConfig& q = {}, double tol = kDefaultKernelTol);

/// The value pI(pD f)(t) used by compose_identity_residual.
double pfi_of_pfd(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
                  const QuadratureConfig& q = {}, double tol = kDefaultKernelTol);

/// f(t) - omega(a) f(a) / omega(t).
double base_corrected_value(const ScalarFunction& f, const WeightFunction& w, double a, double t);

}  // namespace pfc
