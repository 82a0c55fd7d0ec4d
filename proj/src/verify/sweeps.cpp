#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <utility>

#include "pfc/closedforms.hpp"
#include "pfc/errors.hpp"
#include "pfc/format.hpp"
#include "pfc/operators.hpp"
#include "pfc/params.hpp"
#include "pfc/taylor.hpp"
#include "pfc/verify.hpp"

namespace pfc::verify {
namespace {

std::string tuple(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string out;
  for (const auto& [key, value] : fields) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

std::string num(double x) { return format_double(x); }

bool grid_empty(const SweepGrid& g) {
  return g.alphas.empty() || g.betas.empty() || g.ps.empty() || g.functions.empty() || g.weights.empty();
}

// Runs one case; an exception becomes a failing case carrying its message.
void run_case(SweepReport& report, const std::string& params, const std::function<std::pair<double, double>()>& body) {
  try {
    const auto [lhs, rhs] = body();
    report.add(params, lhs, rhs);
  } catch (const Error& e) {
    report.add(params + ",error=" + e.what(), std::nan(""), 0.0);
  }
}

template <class F>
void for_each_operator_case(const SweepGrid& g, F&& body) {
  for (double alpha : g.alphas)
    for (double beta : g.betas)
      for (double p : g.ps)
        for (const auto& fname : g.functions)
          for (const auto& wname : g.weights) body(alpha, beta, p, fname, wname);
}

}  // namespace

void SweepReport::add(std::string params, double lhs, double rhs) {
  SweepCase c{std::move(params), lhs, rhs, std::fabs(lhs - rhs), 0.0};
  c.rel_err = rhs != 0.0 ? c.abs_err / std::fabs(rhs) : c.abs_err;
  if (!std::isfinite(c.abs_err)) {
    c.abs_err = std::numeric_limits<double>::infinity();
    c.rel_err = c.abs_err;
  }
  max_abs_err = std::max(max_abs_err, c.abs_err);
  max_rel_err = std::max(max_rel_err, c.rel_err);
  if (!(c.abs_err <= tolerance)) pass = false;
  cases.push_back(std::move(c));
}

void SweepReport::append(const SweepReport& other) {
  for (const auto& c : other.cases) add(c.params, c.lhs, c.rhs);
}

std::string SweepReport::to_text() const {
  std::string out;
  for (const auto& c : cases) {
    out += c.params + '\t' + num(c.lhs) + '\t' + num(c.rhs) + '\t' + num(c.abs_err) + '\t' + num(c.rel_err) + '\n';
  }
  out += "MAX\t" + num(max_abs_err) + '\t' + num(max_rel_err) + '\t' + (pass ? "PASS" : "FAIL") + '\n';
  return out;
}

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "composition") return Suite::composition;
  if (name == "forms") return Suite::forms;
  if (name == "iteration") return Suite::iteration;
  if (name == "reductions") return Suite::reductions;
  if (name == "taylor") return Suite::taylor;
  return std::nullopt;
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::composition:
      return "composition";
    case Suite::forms:
      return "forms";
    case Suite::iteration:
      return "iteration";
    case Suite::reductions:
      return "reductions";
    case Suite::taylor:
      return "taylor";
  }
  return "?";
}

ScalarFunction named_function(const std::string& name) {
  if (name == "t") return identity_function();
  if (name == "t^2") return square_function();
  if (name == "sin") return sin_function(1.0);
  if (name == "cos") return cos_function(1.0);
  if (name == "exp") return exp_function(1.0);
  throw DomainError("unknown test function '" + name + "'");
}

WeightFunction named_weight(const std::string& name) {
  if (name == "1") return WeightFunction::unit();
  if (name == "exp(-t)") return exp_weight(1.0);
  if (name == "1+t^2") return quadratic_weight(1.0);
  throw DomainError("unknown test weight '" + name + "'");
}

SweepReport composition_sweep(const SweepGrid& g, double tol, const SweepOptions& options) {
  SweepReport report;
  report.tolerance = tol;
  if (grid_empty(g)) return report;
  for_each_operator_case(g, [&](double alpha, double beta, double p, const std::string& fname, const std::string& wname) {
    const std::string params =
        tuple({{"alpha", num(alpha)}, {"beta", num(beta)}, {"p", num(p)}, {"f", fname}, {"w", wname}, {"t", num(g.t)}});
    run_case(report, params, [&] {
      const PowerParams pp(alpha, beta, p);
      const ScalarFunction f = named_function(fname);
      const WeightFunction w = named_weight(wname);
      const double lhs = pfi_of_pfd(f, pp, w, g.a, g.t, options.composition_quadrature);
      return std::pair{lhs, base_corrected_value(f, w, g.a, g.t)};
    });
  });
  return report;
}

SweepReport forms_sweep(const SweepGrid& g, double tol, const SweepOptions&) {
  SweepReport report;
  report.tolerance = tol;
  if (grid_empty(g)) return report;
  for_each_operator_case(g, [&](double alpha, double beta, double p, const std::string& fname, const std::string& wname) {
    const std::string params =
        tuple({{"alpha", num(alpha)}, {"beta", num(beta)}, {"p", num(p)}, {"f", fname}, {"w", wname}, {"t", num(g.t)}});
    run_case(report, params, [&] {
      const PowerParams pp(alpha, beta, p);
      const ScalarFunction f = named_function(fname);
      const WeightFunction w = named_weight(wname);
      const double series = pfd_series(f, pp, w, g.a, g.t).value;
      return std::pair{series, pfd_quadrature(f, pp, w, g.a, g.t)};
    });
  });
  return report;
}

SweepReport iteration_sweep(const SweepGrid& g, double tol, const SweepOptions& options) {
  SweepReport report;
  report.tolerance = tol;
  if (grid_empty(g) || g.max_iteration < 1) return report;
  std::size_t index = 0;
  for (double alpha : g.alphas)
    for (double beta : g.betas)
      for (double p : g.ps)
        for (const auto& wname : g.weights) {
          const std::string& fname = g.functions[index++ % g.functions.size()];
          const std::string base =
              tuple({{"alpha", num(alpha)}, {"beta", num(beta)}, {"p", num(p)}, {"f", fname}, {"w", wname}});
          // One case per parameter tuple, reporting the worst n.
          std::string worst_params = base;
          double worst_lhs = 0.0;
          double worst_rhs = 0.0;
          double worst = -1.0;
          bool failed = false;
          for (int n = 1; n <= g.max_iteration && !failed; ++n) {
            try {
              const PowerParams pp(alpha, beta, p);
              const ScalarFunction f = named_function(fname);
              const WeightFunction w = named_weight(wname);
              const double lhs = iterated_pfi(f, n, pp, w, g.a, g.t);
              const double rhs = naive_iterated_pfi(f, n, alpha, beta, p, w, g.a, g.t, options.naive);
              const double err = std::fabs(lhs - rhs);
              if (!(err <= worst)) {
                worst = std::isfinite(err) ? err : std::numeric_limits<double>::infinity();
                worst_lhs = lhs;
                worst_rhs = rhs;
                worst_params = base + ",n=" + std::to_string(n);
              }
            } catch (const Error& e) {
              worst_params = base + ",n=" + std::to_string(n) + ",error=" + e.what();
              worst_lhs = std::nan("");
              worst_rhs = 0.0;
              failed = true;
            }
          }
          report.add(worst_params, worst_lhs, worst_rhs);
        }
  return report;
}

SweepReport reductions_sweep(const SweepGrid& g, double tol, const SweepOptions&) {
  SweepReport report;
  report.tolerance = tol;
  if (g.alphas.empty() || g.functions.empty() || g.reduction_times.empty()) return report;
  constexpr double e = std::numbers::e;
  for (double alpha : g.alphas)
    for (const auto& fname : g.functions)
      for (double t : g.reduction_times) {
        const std::string tail = tuple({{"alpha", num(alpha)}, {"f", fname}, {"t", num(t)}});
        run_case(report, "CF," + tail, [&] {
          const ScalarFunction f = named_function(fname);
          const double lhs = pfd_quadrature(f, PowerParams(alpha, 1.0, e), WeightFunction::unit(), g.a, t);
          return std::pair{lhs, reference_caputo_fabrizio(f, alpha, g.a, t)};
        });
        run_case(report, "AB," + tail, [&] {
          const ScalarFunction f = named_function(fname);
          const double lhs = pfd_quadrature(f, PowerParams(alpha, alpha, e), WeightFunction::unit(), g.a, t);
          return std::pair{lhs, reference_atangana_baleanu(f, alpha, g.a, t)};
        });
      }
  return report;
}

SweepReport mvt_sweep(const SweepGrid& g, double tol, const SweepOptions& options) {
  SweepReport report;
  report.tolerance = tol;
  if (grid_empty(g)) return report;
  TaylorOptions topts;
  topts.quadrature = options.taylor_quadrature;
  for_each_operator_case(g, [&](double alpha, double beta, double p, const std::string& fname, const std::string& wname) {
    const std::string base =
        tuple({{"alpha", num(alpha)}, {"beta", num(beta)}, {"p", num(p)}, {"f", fname}, {"w", wname}, {"t", num(g.t)}});
    try {
      const PowerParams pp(alpha, beta, p);
      const ScalarFunction f = named_function(fname);
      const WeightFunction w = named_weight(wname);
      const RootSearch root = find_first_root(
          [&](double lambda) { return mvt_residual(f, pp, w, g.a, g.t, lambda, topts); }, g.a, g.t);
      if (root.lambda) {
        report.add(base + ",lambda=" + num(*root.lambda), root.residual, 0.0);
      } else if (root.identically_small) {
        report.add(base + ",constant-like", root.max_abs_scan, 0.0);
      } else {
        report.add(base + ",no-sign-change,closest=" + num(root.best_x), root.best_residual, 0.0);
      }
    } catch (const Error& e) {
      report.add(base + ",error=" + e.what(), std::nan(""), 0.0);
    }
  });
  return report;
}

namespace {

template <class Residual>
void add_root_case(SweepReport& report, const std::string& base, double lo, double hi, Residual&& residual) {
  try {
    const RootSearch root = find_first_root(residual, lo, hi);
    if (root.lambda) {
      report.add(base + ",lambda=" + num(*root.lambda), root.residual, 0.0);
    } else if (root.identically_small) {
      report.add(base + ",constant-like", root.max_abs_scan, 0.0);
    } else {
      report.add(base + ",no-sign-change,closest=" + num(root.best_x), root.best_residual, 0.0);
    }
  } catch (const Error& e) {
    report.add(base + ",error=" + e.what(), std::nan(""), 0.0);
  }
}

}  // namespace

SweepReport remainder_sweep(const SweepGrid& g, double tol, const SweepOptions&) {
  SweepReport report;
  report.tolerance = tol;
  if (g.alphas.empty() || g.betas.empty() || g.ps.empty() || g.remainder_orders.empty()) return report;
  const RegisteredKind kinds[] = {RegisteredKind::exp_delta, RegisteredKind::cos_delta, RegisteredKind::sin_delta};
  for (RegisteredKind kind : kinds)
    for (double alpha : g.alphas)
      for (double beta : g.betas)
        for (double p : g.ps) {
          const RegisteredFunction fn{kind, 1.0};
          const PowerParams pp(alpha, beta, p);
          if (!(closed_form_ratio(fn, pp) < g.max_closed_form_ratio)) continue;
          for (int N : g.remainder_orders) {
            const std::string base = tuple({{"f", kind_name(kind)},
                                            {"alpha", num(alpha)},
                                            {"beta", num(beta)},
                                            {"p", num(p)},
                                            {"N", std::to_string(N)},
                                            {"t", num(g.t)}});
            double gap = 0.0;
            try {
              const TaylorApproximant approx =
                  build_approximant(fn, N, pp, WeightFunction::unit(), g.a, DerivativeSource::closed_form);
              gap = fn(g.t) - approx(g.t);
            } catch (const Error& e) {
              report.add(base + ",error=" + e.what(), std::nan(""), 0.0);
              continue;
            }
            add_root_case(report, base, g.a, g.t, [&](double lambda) {
              return gap - remainder(fn, N, pp, WeightFunction::unit(), g.a, g.t, lambda, DerivativeSource::closed_form);
            });
          }
        }
  return report;
}

SweepReport numeric_remainder_sweep(const SweepGrid& g, double tol, const SweepOptions& options) {
  SweepReport report;
  report.tolerance = tol;
  if (grid_empty(g) || g.remainder_orders.empty()) return report;
  std::size_t index = 0;
  for (double alpha : g.alphas)
    for (double beta : g.betas)
      for (double p : g.ps) {
        const std::string& fname = g.functions[index++ % g.functions.size()];
        for (int N : g.remainder_orders) {
          const std::string base = tuple({{"f", fname},
                                          {"alpha", num(alpha)},
                                          {"beta", num(beta)},
                                          {"p", num(p)},
                                          {"N", std::to_string(N)},
                                          {"t", num(g.t)}});
          try {
            const PowerParams pp(alpha, beta, p);
            const ScalarFunction f = named_function(fname);
            // A_N = f(a) under the literal operators, so f(t) - A_N(t) = f(t) - f(a).
            const double gap = f(g.t) - f(g.a);
            const double w_poly = weight_polynomial(N + 1, pp, g.t - g.a);
            IteratedConfig iterated;
            iterated.resolution_tol = tol;
            IteratedDerivative d(f, N + 1, pp, WeightFunction::unit(), g.a, g.t, options.taylor_quadrature,
                                 kDefaultKernelTol, iterated);
            add_root_case(report, base, g.a, g.t, [&](double lambda) { return gap - d(lambda) * w_poly; });
          } catch (const Error& e) {
            report.add(base + ",error=" + e.what(), std::nan(""), 0.0);
          }
        }
      }
  return report;
}

SweepReport telescoping_sweep(const SweepGrid& g, double tol, const SweepOptions& options) {
  SweepReport report;
  report.tolerance = tol;
  if (grid_empty(g)) return report;
  TaylorOptions topts;
  topts.quadrature = options.taylor_quadrature;
  topts.iterated.resolution_tol = tol;
  std::size_t index = 0;
  for (double alpha : g.alphas)
    for (double beta : g.betas)
      for (double p : g.ps) {
        const std::string& fname = g.functions[index++ % g.functions.size()];
        for (int n = 0; n <= 1; ++n) {
          const std::string params = tuple({{"f", fname},
                                            {"alpha", num(alpha)},
                                            {"beta", num(beta)},
                                            {"p", num(p)},
                                            {"n", std::to_string(n)},
                                            {"t", num(g.t)}});
          run_case(report, params, [&] {
            const PowerParams pp(alpha, beta, p);
            const double value =
                telescoping_check(named_function(fname), n, pp, WeightFunction::unit(), g.a, g.t, topts);
            return std::pair{value, 0.0};
          });
        }
      }
  return report;
}

SweepReport run_sweep(Suite suite, double tol, const SweepGrid& grid, const SweepOptions& options) {
  switch (suite) {
    case Suite::composition:
      return composition_sweep(grid, tol, options);
    case Suite::forms:
      return forms_sweep(grid, tol, options);
    case Suite::iteration:
      return iteration_sweep(grid, tol, options);
    case Suite::reductions:
      return reductions_sweep(grid, tol, options);
    case Suite::taylor: {
      SweepReport report;
      report.tolerance = tol;
      auto tagged = [&](const char* tag, const SweepReport& part) {
        for (const auto& c : part.cases) report.add(std::string(tag) + ',' + c.params, c.lhs, c.rhs);
      };
      tagged("mvt", mvt_sweep(grid, tol, options));
      tagged("remainder", remainder_sweep(grid, tol, options));
      tagged("telescoping", telescoping_sweep(grid, tol, options));
      return report;
    }
  }
  return {};
}

}  // namespace pfc::verify
