#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "pfc/operators.hpp"
#include "pfc/verify.hpp"

using namespace pfc;
using namespace pfc::verify;

TEST_CASE("RL oracle analytic cases") {
  for (double beta : {0.5, 1.0, 1.7}) {
    const double expected = std::pow(0.8, beta) / std::tgamma(beta + 1.0);
    CHECK(std::fabs(oracle_rl_integral(constant_function(1.0), WeightFunction(), beta, 0.2, 1.0) - expected) < 1e-9);
  }
  CHECK(std::fabs(oracle_rl_integral(sin_function(), WeightFunction(), 1.0, 0.0, 1.0) - (1.0 - std::cos(1.0))) < 1e-12);
  CHECK(oracle_rl_integral(sin_function(), WeightFunction(), 0.5, 0.4, 0.4) == 0.0);
}

TEST_CASE("RL oracle agrees with the library across weights") {
  for (const char* w : {"1", "exp(-t)", "1+t^2"}) {
    for (double beta : {0.5, 0.8, 1.5}) {
      const double lib = rl_integral(exp_function(), named_weight(w), beta, 0.0, 1.0);
      const double ref = oracle_rl_integral(exp_function(), named_weight(w), beta, 0.0, 1.0);
      CHECK(std::fabs(lib - ref) < 1e-7);
    }
  }
}

TEST_CASE("Caputo-Fabrizio reference") {
  const double alpha = 0.5;
  const double chi = 0.5;
  const double mu = 1.0;
  for (double t : {0.25, 1.0}) {
    const double expected = (1.0 - std::exp(-mu * t)) / (chi * mu);
    CHECK(std::fabs(reference_caputo_fabrizio(identity_function(), alpha, 0.0, t) - expected) < 1e-13);
  }
  CHECK(reference_caputo_fabrizio(constant_function(4.0), 0.3, 0.0, 1.0) == 0.0);
}

TEST_CASE("Atangana-Baleanu reference") {
  CHECK(reference_atangana_baleanu(constant_function(4.0), 0.3, 0.0, 1.0) == 0.0);
  // E_1(z) = e^z and E_{1/2}(-1) = e erfc(1).
  CHECK(std::fabs(reference_mittag_leffler(1.0, -2.0) - std::exp(-2.0)) < 1e-15);
  CHECK(std::fabs(reference_mittag_leffler(0.5, -1.0) - 0.42758357615580700441) < 1e-15);
  const double lib = pfd_quadrature(identity_function(), PowerParams(0.5, 0.5, std::numbers::e), WeightFunction(), 0.0, 1.0);
  CHECK(std::fabs(reference_atangana_baleanu(identity_function(), 0.5, 0.0, 1.0) - lib) < 1e-10);
  CHECK(reference_weighted_atangana_baleanu(sin_function(), WeightFunction(), 0.4, 0.0, 0.7) ==
        reference_atangana_baleanu(sin_function(), 0.4, 0.0, 0.7));
}

TEST_CASE("sweep report bookkeeping and text format") {
  SweepReport r;
  r.tolerance = 1e-6;
  r.add("a=1", 1.0, 1.0);
  r.add("a=2", 2.0, 2.0 + 1e-7);
  CHECK(r.pass);
  CHECK(r.max_abs_err == doctest::Approx(1e-7));
  r.add("a=3", std::nan(""), 0.0);
  CHECK_FALSE(r.pass);
  const std::string text = r.to_text();
  CHECK(text.rfind("a=1\t1\t1\t0\t0\n", 0) == 0);
  CHECK(text.find("MAX\tinf\tinf\tFAIL\n") != std::string::npos);
}

TEST_CASE("empty grids give vacuous passes") {
  SweepGrid empty;
  empty.alphas.clear();
  for (Suite s : {Suite::composition, Suite::forms, Suite::iteration, Suite::reductions, Suite::taylor}) {
    const SweepReport r = run_sweep(s, 1e-6, empty);
    CHECK(r.cases.empty());
    CHECK(r.pass);
    CHECK(r.to_text() == "MAX\t0\t0\tPASS\n");
  }
}

TEST_CASE("suite names round trip") {
  for (Suite s : {Suite::composition, Suite::forms, Suite::iteration, Suite::reductions, Suite::taylor}) {
    CHECK(parse_suite(suite_name(s)) == s);
  }
  CHECK_FALSE(parse_suite("nonsense").has_value());
}

TEST_CASE("small sweeps run deterministically") {
  SweepGrid g;
  g.alphas = {0.5};
  g.betas = {0.8};
  g.ps = {3.0};
  g.weights = {"1+t^2"};
  const SweepReport a = run_sweep(Suite::forms, 1e-8, g);
  const SweepReport b = run_sweep(Suite::forms, 1e-8, g);
  CHECK(a.cases.size() == 4);
  CHECK(a.pass);
  CHECK(a.to_text() == b.to_text());
  const SweepReport comp = run_sweep(Suite::composition, 1e-6, g);
  CHECK(comp.pass);
  const SweepReport it = run_sweep(Suite::iteration, 1e-6, g);
  CHECK(it.cases.size() == 1);
  CHECK(it.pass);
}

TEST_CASE("taylor suite tags its batteries") {
  SweepGrid g;
  g.alphas = {0.1};
  g.betas = {1.5};
  g.ps = {2.0};
  g.functions = {"sin"};
  g.weights = {"1"};
  g.remainder_orders = {0};
  const SweepReport r = run_sweep(Suite::taylor, 1e-5, g);
  REQUIRE(r.cases.size() == 1 + 3 + 2);
  CHECK(r.cases[0].params.rfind("mvt,", 0) == 0);
  CHECK(r.cases[1].params.rfind("remainder,", 0) == 0);
  CHECK(r.cases[4].params.rfind("telescoping,", 0) == 0);
}
