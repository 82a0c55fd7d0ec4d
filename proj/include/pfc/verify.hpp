#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pfc/function.hpp"
#include "pfc/quadrature.hpp"

namespace pfc::verify {

// ---------------------------------------------------------------------------
// Reference oracles. None of these calls the operator it is compared against.

inline constexpr std::size_t kOraclePanels = 1'000'000;

/// Weighted Riemann-Liouville integral by u = (t - tau)^order and a composite
/// trapezoid in u with `panels` panels.
double oracle_rl_integral(const ScalarFunction& f, const WeightFunction& w, double order, double a, double t,
                          std::size_t panels = kOraclePanels);

/// (1/chi) int_a^t exp(-mu (t - tau)) f'(tau) dtau with N == 1, composite Simpson.
double reference_caputo_fabrizio(const ScalarFunction& f, double alpha, double a, double t,
                                 std::size_t panels = 20'000);

/// (1/chi) int_a^t E_alpha(-mu (t - tau)^alpha) f'(tau) dtau with N == 1.
/// tau = t - (t - a) v^10 and composite Simpson in v; E_alpha is summed from
/// its own table of 1/Gamma(alpha k + 1).
double reference_atangana_baleanu(const ScalarFunction& f, double alpha, double a, double t,
                                  std::size_t panels = 100'000);

/// Weighted variant: (1/chi) (1/omega(t)) int E_alpha(...) (omega f)'(tau) dtau.
double reference_weighted_atangana_baleanu(const ScalarFunction& f, const WeightFunction& w, double alpha, double a,
                                           double t, std::size_t panels = 100'000);

/// One-parameter Mittag-Leffler E_alpha(z) by direct summation in extended precision.
double reference_mittag_leffler(double alpha, double z);

struct NaiveIterationConfig {
  /// Graded grid a + (t - a) (i / intervals)^grading for the tabulated levels.
  std::size_t intervals = 256;
  double grading = 5.0;
  QuadratureConfig quadrature{64, 8, true, 16};
};

/// n nested applications of the single power fractional integral, each
/// intermediate level tabulated on a graded grid and interpolated by cubics.
double naive_iterated_pfi(const ScalarFunction& f, int n, double alpha, double beta, double p,
                          const WeightFunction& w, double a, double t, const NaiveIterationConfig& config = {});

// ---------------------------------------------------------------------------
// Sweeps

struct SweepCase {
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
};

struct SweepReport {
  std::vector<SweepCase> cases;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = true;

  /// Appends a case and updates the maxima and the verdict (abs_err <= tolerance).
  /// Non-finite values count as failures.
  void add(std::string params, double lhs, double rhs);
  void append(const SweepReport& other);

  /// One tab-separated line per case, then `MAX <abs> <rel> PASS|FAIL`.
  std::string to_text() const;
};

enum class Suite { composition, forms, iteration, reductions, taylor };

std::optional<Suite> parse_suite(const std::string& name);
const char* suite_name(Suite suite);

/// Parameter grid of a sweep. Function names: t, t^2, sin, exp.
/// Weight names: 1, exp(-t), 1+t^2. Any empty list yields a report with no cases.
struct SweepGrid {
  std::vector<double> alphas{0.1, 0.5, 0.9};
  std::vector<double> betas{0.8, 1.0, 1.5};
  std::vector<double> ps{0.5, 2.718281828459045, 3.0};
  std::vector<std::string> functions{"t", "t^2", "sin", "exp"};
  std::vector<std::string> weights{"1", "exp(-t)", "1+t^2"};
  double a = 0.0;
  double t = 1.0;
  /// Evaluation points of the reductions suite.
  std::vector<double> reduction_times{0.25, 0.5, 0.75, 1.0};
  /// Iteration orders of the iteration suite.
  int max_iteration = 4;
  /// Remainder orders and weight of the taylor suite's closed-form checks.
  std::vector<int> remainder_orders{0, 1, 2};
  double max_closed_form_ratio = 0.9;
};

struct SweepOptions {
  /// Quadrature of the composition suite, whose doubly nested quadrature is the costliest.
  QuadratureConfig composition_quadrature{32, 8, true, 12};
  /// Quadrature of the telescoping and numeric-remainder checks.
  QuadratureConfig taylor_quadrature{32, 8, true, 12};
  NaiveIterationConfig naive{};
};

ScalarFunction named_function(const std::string& name);
WeightFunction named_weight(const std::string& name);

/// Single-battery entry points; run_sweep dispatches to these.
SweepReport composition_sweep(const SweepGrid& grid, double tol, const SweepOptions& options = {});
SweepReport forms_sweep(const SweepGrid& grid, double tol, const SweepOptions& options = {});
SweepReport iteration_sweep(const SweepGrid& grid, double tol, const SweepOptions& options = {});
/// Caputo-Fabrizio (p = e, beta = 1) and Atangana-Baleanu (p = e, beta = alpha), unit weight.
SweepReport reductions_sweep(const SweepGrid& grid, double tol, const SweepOptions& options = {});
/// Mean value point existence over the full operator grid (functions, weights, alpha, beta, p).
SweepReport mvt_sweep(const SweepGrid& grid, double tol, const SweepOptions& options = {});
/// f(t) - A_N(t) - R_N(lambda) at a bracketed lambda for exp, cos, sin (delta = 1)
/// with closed-form derivatives, over parameter sets with ratio below the grid bound.
SweepReport remainder_sweep(const SweepGrid& grid, double tol, const SweepOptions& options = {});
/// The same check with numeric derivatives (the literal operator definition).
/// Iterated levels use resolution_tol = tol, so a coarse level fails its case.
SweepReport numeric_remainder_sweep(const SweepGrid& grid, double tol, const SweepOptions& options = {});
/// Telescoping identity for n = 0, 1 on a reduced battery, resolution_tol = tol.
SweepReport telescoping_sweep(const SweepGrid& grid, double tol, const SweepOptions& options = {});

/// The taylor suite is mvt + remainder + telescoping.
SweepReport run_sweep(Suite suite, double tol, const SweepGrid& grid = {}, const SweepOptions& options = {});

}  // namespace pfc::verify
