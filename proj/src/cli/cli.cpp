#include "pfc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "pfc/closedforms.hpp"
#include "pfc/errors.hpp"
#include "pfc/format.hpp"
#include "pfc/operators.hpp"
#include "pfc/specfun.hpp"
#include "pfc/taylor.hpp"
#include "pfc/verify.hpp"

namespace pfc::cli {
namespace {

constexpr double kDefaultTol = 1e-15;

double default_suite_tol(verify::Suite suite) {
  switch (suite) {
    case verify::Suite::composition:
    case verify::Suite::iteration:
      return 1e-6;
    case verify::Suite::forms:
      return 1e-8;
    case verify::Suite::reductions:
      return 1e-10;
    case verify::Suite::taylor:
      return 1e-8;
  }
  return 1e-8;
}

struct Globals {
  std::string tol;
  std::size_t quad_panels = 0;
  bool seedless = false;
  std::string out;
};

struct OperatorArgs {
  std::string function = "t";
  std::string delta = "1";
  std::string alpha;
  std::string beta;
  std::string p;
  std::string weight = "one";
  std::string a = "0";
  std::string grid;
  std::string form = "quadrature";
  int order = 1;
  double grid_density = IteratedConfig{}.grid_density;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

ScalarFunction parse_function(const std::string& spec, double delta) {
  if (spec == "t") return identity_function();
  if (spec == "t^2") return square_function();
  if (spec == "sin") return sin_function(delta);
  if (spec == "cos") return cos_function(delta);
  if (spec == "exp") return exp_function(delta);
  if (spec.rfind("const=", 0) == 0) return constant_function(parse_real(spec.substr(6)));
  throw DomainError("unknown function '" + spec + "' (expected t, t^2, sin, cos, exp or const=c)");
}

WeightFunction parse_weight(const std::string& spec) {
  if (spec == "one" || spec == "1") return WeightFunction::unit();
  static const std::regex exp_re(R"(exp\(-(.+)\*t\))");
  static const std::regex quad_re(R"(1\+(.+)\*t\^2)");
  std::smatch m;
  if (std::regex_match(spec, m, exp_re)) return exp_weight(parse_real(m[1]));
  if (std::regex_match(spec, m, quad_re)) {
    const double c = parse_real(m[1]);
    if (c < 0.0) throw DomainError("weight 1+c*t^2 needs c >= 0");
    return quadratic_weight(c);
  }
  throw DomainError("unknown weight '" + spec + "' (expected one, exp(-c*t) or 1+c*t^2)");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw DomainError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw DomainError("failed writing '" + path + "'");
}

double tol_or(const Globals& g, double fallback) {
  if (g.tol.empty()) return fallback;
  const double tol = parse_real(g.tol);
  if (!(tol > 0.0)) throw DomainError("--tol must be > 0");
  return tol;
}

QuadratureConfig quadrature_of(const Globals& g) {
  QuadratureConfig q;
  if (g.quad_panels != 0) q.panels = g.quad_panels;
  q.validate();
  return q;
}

PowerParams params_of(const OperatorArgs& o) {
  if (o.alpha.empty() || o.beta.empty() || o.p.empty()) throw DomainError("--alpha, --beta and --p are required");
  return PowerParams(parse_real(o.alpha), parse_real(o.beta), parse_real(o.p));
}

std::string cmd_ml(const std::string& k, const std::string& l, const std::string& p, const std::string& tau,
                   const std::string& grid, const Globals& g) {
  if (tau.empty() == grid.empty()) throw DomainError("give exactly one of --tau or --grid");
  const std::vector<double> taus = tau.empty() ? GridSpec::parse(grid).values() : std::vector<double>{parse_real(tau)};
  PowerMittagLeffler ml(parse_real(k), parse_real(l), parse_real(p));
  const double tol = tol_or(g, kDefaultTol);
  std::string csv = "tau,value,terms_used\n";
  for (double x : taus) {
    const SeriesResult r = ml.evaluate(x, tol);
    csv += format_double(x) + ',' + format_double(r.value) + ',' + std::to_string(r.terms_used) + '\n';
  }
  return csv;
}

std::string cmd_deriv(const OperatorArgs& o, const Globals& g) {
  const PowerParams pp = params_of(o);
  const ScalarFunction f = parse_function(o.function, parse_real(o.delta));
  const WeightFunction w = parse_weight(o.weight);
  const double a = parse_real(o.a);
  const std::vector<double> ts = GridSpec::parse(o.grid).values();
  const QuadratureConfig q = quadrature_of(g);
  const double tol = tol_or(g, kDefaultTol);
  if (o.order < 0) throw DomainError("--order must be >= 0");
  if (ts.front() < a) throw DomainError("grid starts below the base point a");

  std::string csv;
  if (o.form == "series") {
    if (o.order != 1) throw DomainError("--form series supports --order 1 only");
    csv = "t,value,terms_used\n";
    for (double t : ts) {
      const SeriesResult r = pfd_series(f, pp, w, a, t, q, tol);
      csv += format_double(t) + ',' + format_double(r.value) + ',' + std::to_string(r.terms_used) + '\n';
    }
    return csv;
  }
  if (o.form != "quadrature") throw DomainError("--form must be quadrature or series");

  IteratedConfig config;
  config.grid_density = o.grid_density;
  IteratedDerivative d(f, o.order, pp, w, a, ts.back(), q, tol, config);
  csv = "t,value\n";
  for (double t : ts) csv += format_double(t) + ',' + format_double(d(t)) + '\n';
  return csv;
}

std::string cmd_integ(const OperatorArgs& o, const Globals& g) {
  const PowerParams pp = params_of(o);
  const ScalarFunction f = parse_function(o.function, parse_real(o.delta));
  const WeightFunction w = parse_weight(o.weight);
  const double a = parse_real(o.a);
  const std::vector<double> ts = GridSpec::parse(o.grid).values();
  const QuadratureConfig q = quadrature_of(g);
  if (o.order < 0) throw DomainError("--order must be >= 0");
  if (ts.front() < a) throw DomainError("grid starts below the base point a");
  std::string csv = "t,value\n";
  for (double t : ts) csv += format_double(t) + ',' + format_double(iterated_pfi(f, o.order, pp, w, a, t, q)) + '\n';
  return csv;
}

struct TaylorArgs {
  std::string example;
  std::string delta = "1";
  std::string alpha;
  std::string beta;
  std::string p;
  std::string orders = "1,2,3";
  std::string grid = "0:1:201";
  std::string csv;
  std::string svg;
};

void cmd_taylor(const TaylorArgs& t, const Globals& g, std::ostream& out) {
  RegisteredFunction fn{RegisteredKind::sin_delta, parse_real(t.delta)};
  if (t.example == "exp") {
    fn.kind = RegisteredKind::exp_delta;
  } else if (t.example == "cos") {
    fn.kind = RegisteredKind::cos_delta;
  } else if (t.example != "sin") {
    throw DomainError("--example must be exp, cos or sin");
  }
  fn.validate();
  if (t.alpha.empty() || t.beta.empty() || t.p.empty()) throw DomainError("--alpha, --beta and --p are required");
  const PowerParams pp(parse_real(t.alpha), parse_real(t.beta), parse_real(t.p));
  std::vector<int> orders;
  for (const auto& part : split(t.orders, ',')) {
    int n = -1;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), n);
    if (res.ec != std::errc() || res.ptr != part.data() + part.size() || n < 0) {
      throw DomainError("--orders must be a comma-separated list of integers >= 0");
    }
    orders.push_back(n);
  }
  const std::vector<double> ts = GridSpec::parse(t.grid).values();
  if (ts.front() < 0.0) throw DomainError("the examples expand about 0; the grid must start at t >= 0");

  TaylorOptions options;
  options.tol = tol_or(g, kDefaultTol);
  std::vector<PlotSeries> series;
  series.push_back({std::string(kind_name(fn.kind)) + "(" + format_double(fn.delta) + "t)", {}});
  for (double x : ts) series[0].y.push_back(fn(x));
  for (int n : orders) {
    const TaylorApproximant approx =
        build_approximant(fn, n, pp, WeightFunction::unit(), 0.0, DerivativeSource::closed_form, options);
    PlotSeries s{"A_" + std::to_string(n), {}};
    for (double x : ts) s.y.push_back(approx(x));
    series.push_back(std::move(s));
  }

  std::string csv = "t,f";
  for (int n : orders) csv += ",A_" + std::to_string(n);
  csv += '\n';
  for (std::size_t i = 0; i < ts.size(); ++i) {
    csv += format_double(ts[i]);
    for (const auto& s : series) csv += ',' + format_double(s.y[i]);
    csv += '\n';
  }
  const std::string csv_path = !t.csv.empty() ? t.csv : g.out;
  emit(csv, csv_path, out);

  if (!t.svg.empty()) {
    PlotSpec spec;
    spec.title = series[0].label + ": alpha=" + format_double(pp.alpha()) + ", beta=" + format_double(pp.beta()) +
                 ", p=" + format_double(pp.p());
    emit(render_svg(spec, ts, series), t.svg, out);
  }
}

int cmd_verify(const std::string& suite_name, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto suite = verify::parse_suite(suite_name);
  if (!suite) {
    err << "error: unknown suite '" << suite_name << "' (expected composition, forms, iteration, reductions, taylor)\n";
    return kUsage;
  }
  const double tol = tol_or(g, default_suite_tol(*suite));
  const verify::SweepReport report = verify::run_sweep(*suite, tol);
  emit(report.to_text(), g.out, out);
  return report.pass ? kOk : kVerificationFailed;
}

}  // namespace

double parse_real(const std::string& text) {
  if (text == "e") return std::numbers::e;
  if (text == "-e") return -std::numbers::e;
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (text.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw DomainError("'" + text + "' is not a finite real number");
  }
  return v;
}

GridSpec GridSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw DomainError("grid must be min:max:points, got '" + text + "'");
  GridSpec g;
  g.t_min = parse_real(parts[0]);
  g.t_max = parse_real(parts[1]);
  int n = 0;
  const auto res = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
  if (res.ec != std::errc() || res.ptr != parts[2].data() + parts[2].size()) {
    throw DomainError("grid point count '" + parts[2] + "' is not an integer");
  }
  g.points = n;
  if (g.points < 2) throw DomainError("grid needs points >= 2");
  if (!(g.t_max > g.t_min)) throw DomainError("grid needs max > min");
  return g;
}

std::vector<double> GridSpec::values() const {
  return uniform_grid(t_min, t_max, static_cast<std::size_t>(points));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power fractional calculus: special functions, operators, Taylor approximants and checks", "pfcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Series truncation tolerance (verify: pass tolerance)");
  app.add_option("--quad-panels", g.quad_panels, "Composite Gauss-Legendre panels");
  app.add_flag("--seedless", g.seedless, "Reserved; rejected");
  app.add_option("--out", g.out, "Write the result here instead of stdout");

  std::string k, l, p, tau, grid;
  auto* ml = app.add_subcommand("ml", "Power Mittag-Leffler function");
  ml->add_option("--k", k, "k > 0")->required();
  ml->add_option("--l", l, "l > 0")->required();
  ml->add_option("--p", p, "p > 0 (e allowed)")->required();
  ml->add_option("--tau", tau, "Single argument");
  ml->add_option("--grid", grid, "min:max:points");

  OperatorArgs d_args;
  OperatorArgs i_args;
  auto add_operator = [&](const char* name, const char* help, OperatorArgs& o, bool with_form) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--function", o.function, "t, t^2, sin, cos, exp or const=c");
    sub->add_option("--delta", o.delta, "Frequency of sin, cos, exp");
    sub->add_option("--alpha", o.alpha, "0 <= alpha < 1")->required();
    sub->add_option("--beta", o.beta, "beta > 0")->required();
    sub->add_option("--p", o.p, "p > 0 (e allowed)")->required();
    sub->add_option("--weight", o.weight, "one, exp(-c*t) or 1+c*t^2");
    sub->add_option("--a", o.a, "Base point");
    sub->add_option("--grid", o.grid, "min:max:points")->required();
    sub->add_option("--order", o.order, "Iteration order n");
    if (with_form) {
      sub->add_option("--form", o.form, "quadrature or series");
      sub->add_option("--grid-density", o.grid_density, "Intervals per unit length for inner levels");
    }
    return sub;
  };
  auto* deriv = add_operator("deriv", "Power fractional derivative", d_args, true);
  auto* integ = add_operator("integ", "Power fractional integral", i_args, false);

  TaylorArgs t_args;
  auto* taylor = app.add_subcommand("taylor", "Closed-form Taylor approximants of exp, cos, sin");
  taylor->add_option("--example", t_args.example, "exp, cos or sin")->required();
  taylor->add_option("--delta", t_args.delta, "delta > 0");
  taylor->add_option("--alpha", t_args.alpha, "0 <= alpha < 1")->required();
  taylor->add_option("--beta", t_args.beta, "beta > 0")->required();
  taylor->add_option("--p", t_args.p, "p > 0 (e allowed)")->required();
  taylor->add_option("--orders", t_args.orders, "Comma-separated orders");
  taylor->add_option("--grid", t_args.grid, "min:max:points");
  taylor->add_option("--csv", t_args.csv, "CSV output path");
  taylor->add_option("--svg", t_args.svg, "SVG output path");

  std::string suite;
  auto* ver = app.add_subcommand("verify", "Run a verification sweep");
  ver->add_option("--suite", suite, "composition, forms, iteration, reductions or taylor")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_stream;
    const int code = app.exit(e, o, e_stream);
    out << o.str();
    err << e_stream.str();
    return code == 0 ? kOk : kUsage;
  }

  if (g.seedless) {
    err << "error: --seedless is reserved; nothing here draws random numbers\n";
    return kUsage;
  }

  try {
    if (ml->parsed()) {
      emit(cmd_ml(k, l, p, tau, grid, g), g.out, out);
    } else if (deriv->parsed()) {
      emit(cmd_deriv(d_args, g), g.out, out);
    } else if (integ->parsed()) {
      emit(cmd_integ(i_args, g), g.out, out);
    } else if (taylor->parsed()) {
      cmd_taylor(t_args, g, out);
    } else if (ver->parsed()) {
      return cmd_verify(suite, g, out, err);
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const ResolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kResolution;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace pfc::cli
