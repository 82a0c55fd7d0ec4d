#include "pfc/closedforms.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pfc/errors.hpp"
#include "pfc/taylor.hpp"

namespace pfc {
namespace {

// Running binomial C(q+l-1, l-1) kept as an unevaluated sum hi + lo.
class CompensatedBinomial {
 public:
  explicit CompensatedBinomial(int l) : l_(l) {}

  double value() const { return hi_ + lo_; }

  // C(q+l-1, l-1) = C(q+l-2, l-1) (q+l-1) / q.
  void advance(std::size_t q) {
    const double m = static_cast<double>(q) + static_cast<double>(l_) - 1.0;
    const double d = static_cast<double>(q);
    const double prod = hi_ * m;
    const double prod_err = std::fma(hi_, m, -prod);
    const double lo_scaled = lo_ * m + prod_err;
    const double quot = prod / d;
    const double rem = std::fma(-quot, d, prod);
    hi_ = quot;
    lo_ = (rem + lo_scaled) / d;
  }

 private:
  int l_;
  double hi_ = 1.0;
  double lo_ = 0.0;
};

}  // namespace

void RegisteredFunction::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("registered function needs delta > 0");
}

double RegisteredFunction::operator()(double t) const {
  switch (kind) {
    case RegisteredKind::exp_delta:
      return std::exp(delta * t);
    case RegisteredKind::cos_delta:
      return std::cos(delta * t);
    case RegisteredKind::sin_delta:
      return std::sin(delta * t);
  }
  return 0.0;
}

ScalarFunction RegisteredFunction::as_function() const {
  validate();
  switch (kind) {
    case RegisteredKind::exp_delta:
      return exp_function(delta);
    case RegisteredKind::cos_delta:
      return cos_function(delta);
    case RegisteredKind::sin_delta:
      return sin_function(delta);
  }
  return {};
}

const char* kind_name(RegisteredKind kind) {
  switch (kind) {
    case RegisteredKind::exp_delta:
      return "exp";
    case RegisteredKind::cos_delta:
      return "cos";
    case RegisteredKind::sin_delta:
      return "sin";
  }
  return "?";
}

double closed_form_ratio(const RegisteredFunction& g, const PowerParams& pp) {
  g.validate();
  return std::fabs(pp.mu() * pp.log_p()) * std::pow(g.delta, -pp.beta());
}

double closed_form_phase(const RegisteredFunction& g, double beta, std::size_t q, double t) {
  if (q == 0) return g(t);
  const double shift = beta * static_cast<double>(q) * std::numbers::pi / 2.0;
  switch (g.kind) {
    case RegisteredKind::exp_delta:
      return std::exp(g.delta * t);
    case RegisteredKind::cos_delta:
      return std::cos(g.delta * t - shift);
    case RegisteredKind::sin_delta:
      return std::sin(g.delta * t - shift);
  }
  return 0.0;
}

SeriesResult lth_derivative_series(const RegisteredFunction& g, int l, const PowerParams& pp, double t, double tol,
                                   std::size_t max_terms) {
  g.validate();
  if (l < 0) throw DomainError("derivative order must be >= 0");
  if (!(tol > 0.0)) throw DomainError("series tolerance must be > 0");
  if (max_terms == 0) throw DomainError("series needs a positive term cap");
  if (l == 0) return SeriesResult{g(t), 1, 0.0, false};

  const double ratio = closed_form_ratio(g, pp);
  if (ratio >= 1.0) {
    throw ConvergenceError("closed-form derivative series diverges: ratio |mu ln p| delta^-beta = " +
                           std::to_string(ratio) + " >= 1 (l = " + std::to_string(l) + ")");
  }
  const long double scale = 1.0L / std::pow(static_cast<long double>(pp.chi()), static_cast<long double>(l));
  const long double x = static_cast<long double>(pp.kernel_rate()) *
                        std::pow(static_cast<long double>(g.delta), -static_cast<long double>(pp.beta()));
  // |Phi_q| <= phase_bound for every q.
  const long double phase_bound = g.kind == RegisteredKind::exp_delta ? std::exp(static_cast<long double>(g.delta * t)) : 1.0L;

  if (x == 0.0L) return SeriesResult{static_cast<double>(scale * g(t)), 1, 0.0, false};

  CompensatedBinomial binom(l);
  long double power = 1.0L;  // x^q
  long double sum = 0.0L;
  for (std::size_t q = 0; q < max_terms; ++q) {
    if (q > 0) {
      binom.advance(q);
      power *= x;
    }
    const long double coefficient = static_cast<long double>(binom.value()) * power;
    const long double term = coefficient * closed_form_phase(g, pp.beta(), q, t);
    if (q >= 1) {
      const long double bound = std::fabs(coefficient) * phase_bound * scale;
      // Next bound over this one: r (q+l)/(q+1).
      const long double growth = std::fabs(x) * static_cast<long double>(q + static_cast<std::size_t>(l)) /
                                 static_cast<long double>(q + 1);
      if (bound < tol && growth <= 1.0L) {
        return SeriesResult{static_cast<double>(sum * scale), q, static_cast<double>(std::fabs(term) * scale), false};
      }
    }
    sum += term;
  }
  throw ConvergenceError("closed-form derivative series: no convergence at (l, q) = (" + std::to_string(l) + ", " +
                         std::to_string(max_terms) + ")");
}

double example_approximant(const RegisteredFunction& g, int n, const PowerParams& pp, double t, double tol,
                           std::size_t max_terms) {
  g.validate();
  if (n < 0) throw DomainError("approximant order must be >= 0");
  if (t < 0.0) throw DomainError("approximant argument must be >= 0");
  long double sum = 0.0L;
  for (int l = 0; l <= n; ++l) {
    const double d = lth_derivative_series(g, l, pp, 0.0, tol, max_terms).value;
    sum += static_cast<long double>(d) * weight_polynomial(l, pp, t);
  }
  return static_cast<double>(sum);
}

double example_remainder(const RegisteredFunction& g, int N, const PowerParams& pp, double t, double lambda,
                         double tol, std::size_t max_terms) {
  g.validate();
  if (N < 0) throw DomainError("remainder order must be >= 0");
  if (lambda < 0.0 || lambda > t) throw DomainError("remainder point lambda must lie in [0, t]");
  return lth_derivative_series(g, N + 1, pp, lambda, tol, max_terms).value * weight_polynomial(N + 1, pp, t);
}

}  // namespace pfc
