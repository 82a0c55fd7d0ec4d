#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pfc/closedforms.hpp"
#include "pfc/function.hpp"
#include "pfc/operators.hpp"
#include "pfc/params.hpp"

namespace pfc {

/// Where the derivative values D^l f(a) of a Taylor approximant come from.
///   closed_form  - Liouville-sense series of a registered function
///   numeric      - the iterated operator itself, which vanishes at the base for l >= 1
///   user_supplied - values passed in by the caller
enum class DerivativeSource { closed_form, numeric, user_supplied };

const char* source_name(DerivativeSource source);

/// A function to expand: closed-form derivatives need a registered one.
using TaylorSubject = std::variant<ScalarFunction, RegisteredFunction>;

/// W_l(dt) = Sum_{m=0}^{l} C(l,m) chi^(l-m) (ln p phi)^m dt^(m beta) / Gamma(m beta + 1),
/// with 0^0 = 1. DomainError for l < 0 or dt < 0.
double weight_polynomial(int l, const PowerParams& pp, double dt);

struct TaylorOptions {
  QuadratureConfig quadrature{};
  double tol = kDefaultKernelTol;
  std::size_t max_terms = kDefaultSeriesCap;
  IteratedConfig iterated{};
};

/// A_n(t) = (omega(a)/omega(t)) Sum_{l=0}^{n} D^l f(a) W_l(t - a).
struct TaylorApproximant {
  double base_point = 0.0;
  int order = 0;
  PowerParams params;
  WeightFunction weight;
  std::vector<double> derivs_at_base;
  DerivativeSource source = DerivativeSource::numeric;

  double operator()(double t) const;
};

/// Resolves D^l f(a) for l = 0..n from the requested source.
/// closed_form: DerivativeUnavailableError unless f is a RegisteredFunction and the weight is unit.
/// numeric: D^0 = f(a) and D^l f(a) = iterated_pfd(f, l, ..., a) = 0 for l >= 1.
/// user_supplied: use the other overload.
TaylorApproximant build_approximant(const TaylorSubject& f, int n, const PowerParams& pp, const WeightFunction& w,
                                    double a, DerivativeSource source, const TaylorOptions& options = {});

/// Approximant from explicit values D^l f(a), l = 0..derivs.size()-1.
TaylorApproximant build_approximant(std::vector<double> derivs, const PowerParams& pp, const WeightFunction& w,
                                    double a);

double approximant(const TaylorSubject& f, int n, const PowerParams& pp, const WeightFunction& w, double a,
                   DerivativeSource source, double t, const TaylorOptions& options = {});

/// omega(lambda) D^{N+1} f(lambda) W_{N+1}(t - a) / omega(t), a <= lambda <= t.
double remainder(const TaylorSubject& f, int N, const PowerParams& pp, const WeightFunction& w, double a, double t,
                 double lambda, DerivativeSource source, const TaylorOptions& options = {});

/// f(t) - [omega(a) f(a) + omega(lambda) D f(lambda) W_1(t - a)] / omega(t).
double mvt_residual(const ScalarFunction& f, const PowerParams& pp, const WeightFunction& w, double a, double t,
                    double lambda, const TaylorOptions& options = {});

/// [I^n D^n f - I^{n+1} D^{n+1} f](t) - (omega(a)/omega(t)) D^n f(a) W_n(t - a),
/// with every operator taken literally (so D^n f(a) = 0 for n >= 1).
double telescoping_check(const ScalarFunction& f, int n, const PowerParams& pp, const WeightFunction& w, double a,
                         double t, const TaylorOptions& options = {});

/// First root of a residual on [lo, hi].
struct RootSearch {
  /// Set when a sign change (or exact zero) was bracketed.
  std::optional<double> lambda;
  double residual = 0.0;
  /// Largest |residual| over the scan; below 1e-10 counts as identically zero.
  double max_abs_scan = 0.0;
  bool identically_small = false;
  /// Scan point with the smallest |residual|, reported when nothing was bracketed.
  double best_x = 0.0;
  double best_residual = 0.0;
};

inline constexpr int kScanPoints = 129;
inline constexpr double kBisectionTol = 1e-10;

/// Uniform scan with kScanPoints points, first sign change wins, then
/// bisection until the bracket is shorter than kBisectionTol.
RootSearch find_first_root(const RealFn& residual, double lo, double hi);

}  // namespace pfc
