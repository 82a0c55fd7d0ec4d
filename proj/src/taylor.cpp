#include "pfc/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "pfc/errors.hpp"

namespace pfc {
namespace {

const RegisteredFunction& registered_or_throw(const TaylorSubject& f) {
  if (const auto* g = std::get_if<RegisteredFunction>(&f)) return *g;
  throw DerivativeUnavailableError("closed-form derivatives exist only for registered exp/cos/sin functions");
}

ScalarFunction scalar_of(const TaylorSubject& f) {
  if (const auto* g = std::get_if<RegisteredFunction>(&f)) return g->as_function();
  return std::get<ScalarFunction>(f);
}

void require_unit_weight(const WeightFunction& w) {
  if (!w.is_unit()) {
    throw DerivativeUnavailableError("closed-form derivatives are available only for the unit weight");
  }
}

double weight_ratio(const WeightFunction& w, double num, double den) {
  if (w.is_unit()) return 1.0;
  return w.value(num) / w.value(den);
}

}  // namespace

const char* source_name(DerivativeSource source) {
  switch (source) {
    case DerivativeSource::closed_form:
      return "closed_form";
    case DerivativeSource::numeric:
      return "numeric";
    case DerivativeSource::user_supplied:
      return "user_supplied";
  }
  return "?";
}

double weight_polynomial(int l, const PowerParams& pp, double dt) {
  if (l < 0) throw DomainError("weight polynomial index must be >= 0");
  if (!(dt >= 0.0)) throw DomainError("weight polynomial needs dt >= 0");
  const long double chi = pp.chi();
  const long double coupling = pp.integral_coupling();
  long double sum = 0.0L;
  for (int m = 0; m <= l; ++m) {
    long double power = 1.0L;  // dt^(m beta) / Gamma(m beta + 1), 0^0 = 1
    if (m > 0) {
      if (dt == 0.0 || coupling == 0.0L) continue;
      const long double e = static_cast<long double>(m) * pp.beta();
      power = std::exp(e * std::log(static_cast<long double>(dt)) - std::lgamma(e + 1.0L));
    }
    sum += static_cast<long double>(binomial(l, m)) * std::pow(chi, static_cast<long double>(l - m)) *
           std::pow(coupling, static_cast<long double>(m)) * power;
  }
  return static_cast<double>(sum);
}

double TaylorApproximant::operator()(double t) const {
  if (t < base_point) throw DomainError("approximant evaluated below its base point");
  const double dt = t - base_point;
  long double sum = 0.0L;
  for (std::size_t l = 0; l < derivs_at_base.size(); ++l) {
    if (derivs_at_base[l] == 0.0) continue;
    sum += static_cast<long double>(derivs_at_base[l]) * weight_polynomial(static_cast<int>(l), params, dt);
  }
  return static_cast<double>(sum) * weight_ratio(weight, base_point, t);
}

TaylorApproximant build_approximant(const TaylorSubject& f, int n, const PowerParams& pp, const WeightFunction& w,
                                    double a, DerivativeSource source, const TaylorOptions& options) {
  if (n < 0) throw DomainError("approximant order must be >= 0");
  std::vector<double> derivs;
  derivs.reserve(static_cast<std::size_t>(n) + 1);
  switch (source) {
    case DerivativeSource::closed_form: {
      const RegisteredFunction& g = registered_or_throw(f);
      require_unit_weight(w);
      for (int l = 0; l <= n; ++l) {
        derivs.push_back(lth_derivative_series(g, l, pp, a, options.tol, options.max_terms).value);
      }
      break;
    }
    case DerivativeSource::numeric: {
      const ScalarFunction fn = scalar_of(f);
      for (int l = 0; l <= n; ++l) {
        derivs.push_back(iterated_pfd(fn, l, pp, w, a, a, options.quadrature, options.tol, options.iterated));
      }
      break;
    }
    case DerivativeSource::user_supplied:
      throw DomainError("user-supplied derivatives must be passed explicitly");
  }
  TaylorApproximant out{a, n, pp, w, std::move(derivs), source};
  return out;
}

TaylorApproximant build_approximant(std::vector<double> derivs, const PowerParams& pp, const WeightFunction& w,
                                    double a) {
  if (derivs.empty()) throw DomainError("user-supplied derivatives need at least D^0 f(a)");
  const int n = static_cast<int>(derivs.size()) - 1;
  return TaylorApproximant{a, n, pp, w, std::move(derivs), DerivativeSource::user_supplied};
}

double approximant(const TaylorSubject& f, int n, const PowerParams& pp, const WeightFunction& w, double a,
                   DerivativeSource source, double t, const TaylorOptions& options) {
  if (t < a) throw DomainError("approximant evaluated below its base point");
  return build_approximant(f, n, pp, w, a, source, options)(t);
}

double remainder(const TaylorSubject& f, int N, const PowerParams& pp, const WeightFunction& w, double a, double t,
                 double lambda, DerivativeSource source, const TaylorOptions& options) {
  if (N < 0) throw DomainError("remainder order must be >= 0");
  if (!(lambda >= a && lambda <= t)) throw DomainError("remainder point lambda must lie in [a, t]");
  double d = 0.0;
  switch (source) {
    case DerivativeSource::closed_form:
      require_unit_weight(w);
      d = lth_derivative_series(registered_or_throw(f), N + 1, pp, lambda, options.tol, options.max_terms).value;
      break;
    case DerivativeSource::numeric:
      d = iterated_pfd(scalar_of(f), N + 1, pp, w, a, lambda, options.quadrature, options.tol, options.iterated);
      break;
    case DerivativeSource::user_supplied:
      throw DerivativeUnavailableError("the remainder needs D^{N+1} f(lambda), which user-supplied values lack");
  }
  return weight_ratio(w, lambda, t) * d * weight_polynomial(N + 1, pp, t - a);
}

double mvt_residual(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
                    double lambda, const TaylorOptions& options) {
  if (t < a) throw DomainError("upper limit lies below the base point");
  if (!(lambda >= a && lambda <= t)) throw DomainError("mean value point lambda must lie in [a, t]");
  const double d = pfd_quadrature(f, pp, w, a, lambda, options.quadrature, options.tol);
  const double w_t = w.value(t);
  const double bracket = w.value(a) * f(a) + w.value(lambda) * d * weight_polynomial(1, pp, t - a);
  return f(t) - bracket / w_t;
}

double telescoping_check(const ScalarFunction& f, int n, const PowerParams& pp, const WeightFunction& w, double a,
                         double t, const TaylorOptions& options) {
  if (n < 0) throw DomainError("telescoping order must be >= 0");
  if (t < a) throw DomainError("upper limit lies below the base point");
  auto derivative = std::make_shared<IteratedDerivative>(f, n + 1, pp, w, a, t, options.quadrature, options.tol,
                                                         options.iterated);
  const ScalarFunction dn = derivative->level(n);
  const ScalarFunction dn1([derivative](double tau) { return (*derivative)(tau); });

  const double lhs = iterated_pfi(dn, n, pp, w, a, t, options.quadrature) -
                     iterated_pfi(dn1, n + 1, pp, w, a, t, options.quadrature);
  const double dn_at_base = n == 0 ? f(a) : 0.0;
  const double rhs = weight_ratio(w, a, t) * dn_at_base * weight_polynomial(n, pp, t - a);
  return lhs - rhs;
}

RootSearch find_first_root(const RealFn& residual, double lo, double hi) {
  if (!(hi >= lo)) throw DomainError("root search interval is empty");
  RootSearch out;
  std::vector<double> xs(kScanPoints);
  std::vector<double> rs(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i) {
    xs[i] = i + 1 == kScanPoints ? hi : lo + (hi - lo) * static_cast<double>(i) / (kScanPoints - 1);
    rs[i] = residual(xs[i]);
    out.max_abs_scan = std::max(out.max_abs_scan, std::fabs(rs[i]));
    if (i == 0 || std::fabs(rs[i]) < std::fabs(out.best_residual)) {
      out.best_x = xs[i];
      out.best_residual = rs[i];
    }
  }
  out.identically_small = out.max_abs_scan < 1e-10;

  for (int i = 0; i < kScanPoints; ++i) {
    if (rs[i] == 0.0) {
      out.lambda = xs[i];
      out.residual = 0.0;
      return out;
    }
    if (i + 1 < kScanPoints && std::signbit(rs[i]) != std::signbit(rs[i + 1]) && rs[i + 1] != 0.0) {
      double x0 = xs[i];
      double x1 = xs[i + 1];
      double r0 = rs[i];
      double r1 = rs[i + 1];
      while (x1 - x0 > kBisectionTol) {
        const double mid = 0.5 * (x0 + x1);
        if (mid <= x0 || mid >= x1) break;
        const double rm = residual(mid);
        if (rm == 0.0) {
          x0 = x1 = mid;
          r0 = r1 = 0.0;
          break;
        }
        if (std::signbit(rm) == std::signbit(r0)) {
          x0 = mid;
          r0 = rm;
        } else {
          x1 = mid;
          r1 = rm;
        }
      }
      const bool left = std::fabs(r0) <= std::fabs(r1);
      out.lambda = left ? x0 : x1;
      out.residual = left ? r0 : r1;
      return out;
    }
  }
  return out;
}

}  // namespace pfc
