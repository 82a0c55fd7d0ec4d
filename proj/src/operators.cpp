#include "pfc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "pfc/errors.hpp"

namespace pfc {
namespace {

void check_interval(double a, double t) {
  if (!std::isfinite(a) || !std::isfinite(t)) throw DomainError("interval endpoints must be finite");
  if (t < a) {
    throw DomainError("upper limit t = " + std::to_string(t) + " lies below the base point a = " + std::to_string(a));
  }
}

// 1 / Gamma(x) in extended precision, through lgamma past the tgammal range.
long double inverse_gamma_ld(long double x) {
  if (x < 1700.0L) return 1.0L / std::tgamma(x);
  return std::exp(-std::lgamma(x));
}

// z^n / Gamma(beta n + 1) without forming either factor separately when large.
long double power_over_gamma(long double z, std::size_t n, long double beta) {
  if (n == 0) return 1.0L;
  if (z == 0.0L) return 0.0L;
  const long double arg = beta * static_cast<long double>(n) + 1.0L;
  const long double log_mag = static_cast<long double>(n) * std::log(std::fabs(z)) - std::lgamma(arg);
  if (arg < 1700.0L && std::fabs(log_mag) < 11000.0L) {
    return std::pow(z, static_cast<long double>(n)) * inverse_gamma_ld(arg);
  }
  const long double mag = std::exp(log_mag);
  return (z < 0.0L && n % 2 == 1) ? -mag : mag;
}

}  // namespace

double base_corrected_value(const ScalarFunction& f, const WeightFunction& w, double a, double t) {
  if (w.is_unit()) return f(t) - f(a);
  return f(t) - w.value(a) * f(a) / w.value(t);
}

// ---------------------------------------------------------------------------
// Riemann-Liouville integral

RiemannLiouvilleIntegral::RiemannLiouvilleIntegral(WeightFunction w, double a, const QuadratureConfig& q)
    : w_(std::move(w)), a_(a), substitute_(q.singularity_substitution), rule_(q) {}

double RiemannLiouvilleIntegral::operator()(const ScalarFunction& f, double order, double t) const {
  check_interval(a_, t);
  if (!(order >= 0.0)) throw DomainError("Riemann-Liouville order must be >= 0");
  if (order == 0.0) return f(t);
  const double length = t - a_;
  const double w_t = w_.value(t);
  if (length == 0.0) return 0.0;

  auto weighted = [&](double tau) { return w_.is_unit() ? f(tau) : w_.value(tau) * f(tau); };

  if (order < 1.0 && substitute_) {
    // u = s^order turns s^(order-1) ds into du / order.
    const double inv = 1.0 / order;
    const double upper = std::pow(length, order);
    const double integral = rule_.integrate([&](double u) { return weighted(t - std::pow(u, inv)); }, upper);
    return static_cast<double>(integral * inverse_gamma_ld(static_cast<long double>(order) + 1.0L) / w_t);
  }

  const long double scale = inverse_gamma_ld(order);
  const double integral = rule_.integrate(
      [&](double s) { return std::pow(s, order - 1.0) * weighted(t - s); }, length);
  return static_cast<double>(integral * scale / w_t);
}

double rl_integral(const ScalarFunction& f, const WeightFunction& w, double order, double a, double t,
                   const QuadratureConfig& q) {
  return RiemannLiouvilleIntegral(w, a, q)(f, order, t);
}

// ---------------------------------------------------------------------------
// Power fractional derivative, quadrature form

PowerFractionalDerivative::PowerFractionalDerivative(ScalarFunction f, const PowerParams& pp, WeightFunction w,
                                                     double a, const QuadratureConfig& q, double tol)
    : f_(std::move(f)),
      pp_(pp),
      w_(std::move(w)),
      a_(a),
      tol_(tol),
      rule_(q),
      kernel_(pp.beta(), 1.0, pp.p()) {
  if (!(tol > 0.0)) throw DomainError("kernel tolerance must be > 0");
}

double PowerFractionalDerivative::operator()(double t) {
  check_interval(a_, t);
  const double w_t = w_.value(t);
  const double length = t - a_;
  if (length == 0.0) return 0.0;

  const double mu = pp_.mu();
  const double beta = pp_.beta();
  const double integral = rule_.integrate(
      [&](double s) {
        const double kernel = kernel_.evaluate(-mu * std::pow(s, beta), tol_).value;
        return kernel * weighted_derivative(f_, w_, t - s);
      },
      length);
  return integral / (pp_.chi() * w_t);
}

double pfd_quadrature(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
                      const QuadratureConfig& q, double tol) {
  check_interval(a, t);
  if (t == a) {
    w.value(t);
    return 0.0;
  }
  PowerFractionalDerivative d(f, pp, w, a, q, tol);
  return d(t);
}

// ---------------------------------------------------------------------------
// Power fractional derivative, series form

SeriesResult pfd_series(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
                        const QuadratureConfig& q, double tol, std::size_t max_terms) {
  check_interval(a, t);
  if (!(tol > 0.0)) throw DomainError("series tolerance must be > 0");
  if (max_terms == 0) throw DomainError("series needs a positive term cap");
  const double w_t = w.value(t);
  const bool fallback = f.uses_derivative_fallback() || w.uses_derivative_fallback();
  const double length = t - a;
  if (length == 0.0) return SeriesResult{0.0, 1, 0.0, fallback};

  // Every term is RL^{beta n + 1}[(omega f)'/omega](t) =
  //   (1 / Gamma(beta n + 1)) (1 / omega(t)) int_0^L s^{beta n} (omega f)'(t - s) ds,
  // so the integrand samples are shared across terms; only the power kernel changes.
  const CompositeRule rule(q);
  const std::size_t m = rule.size();
  std::vector<long double> log_s(m);
  std::vector<long double> weighted(m);
  long double sample_bound = 0.0L;
  for (std::size_t i = 0; i < m; ++i) {
    const double s = length * rule.nodes()[i];
    const double g = weighted_derivative(f, w, t - s);
    log_s[i] = std::log(static_cast<long double>(s));
    weighted[i] = static_cast<long double>(rule.weights()[i]) * g;
    sample_bound = std::max(sample_bound, std::fabs(static_cast<long double>(g)));
  }

  const long double rate = pp.kernel_rate();
  const long double beta = pp.beta();
  const long double log_len = std::log(static_cast<long double>(length));
  const long double prefactor = static_cast<long double>(length) / static_cast<long double>(w_t);

  auto power_integral = [&](std::size_t n) {
    const long double exponent = beta * static_cast<long double>(n);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < m; ++i) acc += weighted[i] * std::exp(exponent * log_s[i]);
    return acc;
  };
  // |rate|^n L^{beta n} / Gamma(beta n + 1), the decay envelope of the terms.
  auto log_envelope = [&](std::size_t n) {
    if (n == 0) return 0.0L;
    return static_cast<long double>(n) * (std::log(std::fabs(rate)) + beta * log_len) -
           std::lgamma(beta * static_cast<long double>(n) + 1.0L);
  };

  long double sum = 0.0L;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const long double coefficient = power_over_gamma(rate, n, beta);
    const long double term = coefficient == 0.0L ? 0.0L : coefficient * power_integral(n) * prefactor;
    if (n >= 1) {
      // |term_n| <= envelope_n * L * max|(omega f)'| / ((beta n + 1) omega(t)).
      const bool zero_rate = rate == 0.0L;
      const long double bound =
          zero_rate ? 0.0L
                    : std::exp(log_envelope(n)) * sample_bound * prefactor / (beta * static_cast<long double>(n) + 1.0L);
      const bool decreasing = zero_rate || log_envelope(n + 1) <= log_envelope(n);
      if (bound < tol && decreasing) {
        return SeriesResult{static_cast<double>(sum / pp.chi()), n, static_cast<double>(std::fabs(term)), fallback};
      }
    }
    sum += term;
    if (!std::isfinite(static_cast<double>(sum))) throw OverflowError("derivative series overflows");
  }
  throw ConvergenceError("derivative series: no convergence within " + std::to_string(max_terms) + " terms");
}

// ---------------------------------------------------------------------------
// Power fractional integrals

double pfi(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
           const QuadratureConfig& q) {
  check_interval(a, t);
  const double coupling = pp.integral_coupling();
  if (coupling == 0.0) return pp.chi() * f(t);
  return pp.chi() * f(t) + coupling * rl_integral(f, w, pp.beta(), a, t, q);
}

double iterated_pfi(const ScalarFunction& f, int n, const PowerParams& pp, const WeightFunction& w, double a,
                    double t, const QuadratureConfig& q) {
  check_interval(a, t);
  if (n < 0) throw DomainError("iteration count must be >= 0");
  if (n == 0) return f(t);
  const double chi = pp.chi();
  const double coupling = pp.integral_coupling();
  const RiemannLiouvilleIntegral rl(w, a, q);
  double sum = std::pow(chi, n) * f(t);
  if (coupling == 0.0) return sum;
  for (int m = 1; m <= n; ++m) {
    sum += binomial(n, m) * std::pow(chi, n - m) * std::pow(coupling, m) * rl(f, m * pp.beta(), t);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Iterated derivative

IteratedDerivative::IteratedDerivative(const ScalarFunction& f, int order, const PowerParams& pp,
                                       const WeightFunction& w, double a, double t_max, const QuadratureConfig& q,
                                       double tol, const IteratedConfig& config)
    : order_(order), a_(a), t_max_(t_max) {
  check_interval(a, t_max);
  if (order < 0) throw DomainError("derivative order must be >= 0");
  if (!(config.grid_density > 0.0)) throw DomainError("grid density must be > 0");
  levels_.push_back(f);
  if (order == 0) return;

  const double length = t_max - a;
  if (length > 0.0) {
    const auto intervals = std::max<std::size_t>(
        config.min_intervals, static_cast<std::size_t>(std::ceil(config.grid_density * length)));
    const std::vector<double> grid = uniform_grid(a, t_max, intervals + 1);
    for (int k = 1; k < order; ++k) {
      PowerFractionalDerivative d(levels_.back(), pp, w, a, q, tol);
      std::vector<double> samples(grid.size());
      samples[0] = 0.0;
      for (std::size_t i = 1; i < grid.size(); ++i) samples[i] = d(grid[i]);
      CubicInterpolant interp(grid, std::move(samples));
      const double estimate = interp.halving_error_estimate();
      resolution_estimate_ = std::max(resolution_estimate_, estimate);
      if (estimate > config.resolution_tol) {
        throw ResolutionError("iterated derivative level " + std::to_string(k) + ": interpolation error estimate " +
                              std::to_string(estimate) + " exceeds " + std::to_string(config.resolution_tol));
      }
      levels_.push_back(interp.as_function());
    }
  }
  top_.emplace(levels_.back(), pp, w, a, q, tol);
}

double IteratedDerivative::operator()(double t) {
  if (t < a_ || t > t_max_) throw DomainError("iterated derivative queried outside [a, t_max]");
  if (order_ == 0) return levels_.front()(t);
  if (t == a_) return 0.0;
  return (*top_)(t);
}

const ScalarFunction& IteratedDerivative::level(int k) const {
  if (k < 0 || k >= static_cast<int>(levels_.size())) throw DomainError("iterated derivative level out of range");
  return levels_[static_cast<std::size_t>(k)];
}

double iterated_pfd(const ScalarFunction& f, int n, const PowerParams& pp, const WeightFunction& w, double a,
                    double t, const QuadratureConfig& q, double tol, const IteratedConfig& config) {
  check_interval(a, t);
  if (n < 0) throw DomainError("derivative order must be >= 0");
  if (n == 0) return f(t);
  if (t == a) {
    w.value(t);
    return 0.0;
  }
  if (n == 1) return pfd_quadrature(f, pp, w, a, t, q, tol);
  IteratedDerivative d(f, n, pp, w, a, t, q, tol, config);
  return d(t);
}

// ---------------------------------------------------------------------------
// Composition identity

double pfi_of_pfd(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
                  const QuadratureConfig& q, double tol) {
  check_interval(a, t);
  auto derivative = std::make_shared<PowerFractionalDerivative>(f, pp, w, a, q, tol);
  const ScalarFunction inner([derivative](double tau) { return (*derivative)(tau); });
  return pfi(inner, pp, w, a, t, q);
}

double compose_identity_residual(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a,
                                 double t, const QuadratureConfig& q, double tol) {
  return pfi_of_pfd(f, pp, w, a, t, q, tol) - base_corrected_value(f, w, a, t);
}

}  // namespace pfc
