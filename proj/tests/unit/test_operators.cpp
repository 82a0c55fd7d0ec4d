#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pfc/errors.hpp"
#include "pfc/operators.hpp"
#include "pfc/verify.hpp"

using namespace pfc;

namespace {

constexpr double kE = std::numbers::e;

QuadratureConfig light() { return QuadratureConfig{32, 8, true, 12}; }

}  // namespace

TEST_CASE("params validation and derived quantities") {
  const PowerParams pp(0.25, 1.3, 2.0);
  CHECK(pp.chi() == 0.75);
  CHECK(pp.phi() == 0.25);
  CHECK(pp.mu() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(PowerParams(1.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(PowerParams(-0.1, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(PowerParams(0.5, 0.0, 2.0), DomainError);
  CHECK_THROWS_AS(PowerParams(0.5, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(PowerParams(0.5, 1.0, 2.0, [](double) { return -1.0; }), DomainError);
  CHECK_THROWS_AS(PowerParams(0.5, 1.0, 2.0, [](double a) { return 2.0 + a; }), DomainError);
  const PowerParams normed(0.5, 1.0, 2.0, [](double a) { return 1.0 - a * (1.0 - a); });
  CHECK(normed.chi() == doctest::Approx(0.5 / 0.75));
}

TEST_CASE("rl_integral analytic cases") {
  CHECK(rl_integral(constant_function(1.0), WeightFunction(), 1.0, 0.0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  for (double beta : {0.3, 0.5, 0.8, 1.0, 1.5, 2.7}) {
    const double expected = std::pow(1.5, beta) / std::tgamma(beta + 1.0);
    CHECK(std::fabs(rl_integral(constant_function(1.0), WeightFunction(), beta, 0.5, 2.0) - expected) < 1e-13);
  }
  CHECK(rl_integral(sin_function(), WeightFunction(), 1.0, 0.0, 1.0) == doctest::Approx(1.0 - std::cos(1.0)));
  CHECK(rl_integral(sin_function(), WeightFunction(), 0.7, 0.3, 0.3) == 0.0);
  CHECK(rl_integral(sin_function(), WeightFunction(), 0.0, 0.0, 0.4) == std::sin(0.4));
}

TEST_CASE("rl_integral against the trapezoid oracle") {
  // mpmath, 40 digits.
  const double frozen = 0.94201234543257208889;
  const double value = rl_integral(identity_function(), exp_weight(1.0), 0.5, 0.0, 1.0);
  CHECK(std::fabs(value - frozen) < 1e-13);
  const double oracle = verify::oracle_rl_integral(identity_function(), exp_weight(1.0), 0.5, 0.0, 1.0);
  CHECK(std::fabs(value - oracle) < 1e-8);
}

TEST_CASE("rl_integral domain errors") {
  CHECK_THROWS_AS(rl_integral(identity_function(), WeightFunction(), 0.5, 1.0, 0.5), DomainError);
  const WeightFunction bad([](double t) { return 0.5 - t; }, [](double) { return -1.0; });
  CHECK_THROWS_AS(rl_integral(identity_function(), bad, 0.5, 0.0, 1.0), DomainError);
}

TEST_CASE("pfd of a constant vanishes") {
  const PowerParams pp(0.4, 0.9, 3.0);
  for (double t : {0.0, 0.3, 1.0}) {
    CHECK(pfd_quadrature(constant_function(2.5), pp, WeightFunction(), 0.0, t) == 0.0);
  }
}

TEST_CASE("pfd vanishes at the base point exactly") {
  const PowerParams pp(0.4, 0.9, 3.0);
  CHECK(pfd_quadrature(exp_function(), pp, quadratic_weight(1.0), 0.2, 0.2) == 0.0);
  CHECK(iterated_pfd(exp_function(), 3, pp, quadratic_weight(1.0), 0.2, 0.2) == 0.0);
}

TEST_CASE("pfd with p = 1 telescopes") {
  const PowerParams pp(0.6, 1.3, 1.0);
  const WeightFunction w = exp_weight(0.5);
  const ScalarFunction f = sin_function(2.0);
  const double t = 0.9;
  const double expected = (f(t) - w.value(0.1) * f(0.1) / w.value(t)) / pp.chi();
  CHECK(std::fabs(pfd_quadrature(f, pp, w, 0.1, t) - expected) < 1e-13);
  const SeriesResult s = pfd_series(f, pp, w, 0.1, t);
  CHECK(s.terms_used == 1);
  CHECK(std::fabs(s.value - expected) < 1e-13);
}

TEST_CASE("pfd at alpha = 0 is the base-corrected value") {
  const PowerParams pp(0.0, 1.3, 2.0);
  const SeriesResult s = pfd_series(square_function(), pp, WeightFunction(), 0.0, 0.7);
  CHECK(s.terms_used == 1);
  CHECK(std::fabs(s.value - 0.49) < 1e-14);
}

TEST_CASE("pfd Caputo-Fabrizio spot values") {
  const PowerParams pp(0.5, 1.0, kE);
  for (double t : {0.25, 0.5, 1.0}) {
    const double expected = (1.0 - std::exp(-t)) / pp.chi();
    CHECK(std::fabs(pfd_quadrature(identity_function(), pp, WeightFunction(), 0.0, t) - expected) < 1e-12);
  }
}

TEST_CASE("pfd forms agree with the frozen value") {
  const PowerParams pp(0.3, 1.2, 2.0);
  const double frozen = 0.92810063487883294008;  // mpmath, 40 digits
  const double q = pfd_quadrature(sin_function(), pp, WeightFunction(), 0.0, 0.8);
  const SeriesResult s = pfd_series(sin_function(), pp, WeightFunction(), 0.0, 0.8);
  CHECK(std::fabs(q - frozen) < 1e-12);
  CHECK(std::fabs(s.value - q) < 1e-8);
  CHECK_FALSE(s.derivative_fallback);
  const PowerParams pe(0.5, 1.5, 3.0);
  CHECK(std::fabs(pfd_quadrature(exp_function(), pe, WeightFunction(), 0.0, 1.0) - 2.6499371811774601229) < 1e-12);
}

TEST_CASE("pfd_series flags the finite-difference fallback") {
  const ScalarFunction f([](double t) { return t * t * t; });
  const PowerParams pp(0.3, 1.2, 2.0);
  const SeriesResult s = pfd_series(f, pp, WeightFunction(), 0.0, 0.8);
  CHECK(s.derivative_fallback);
  const ScalarFunction exact([](double t) { return t * t * t; }, [](double t) { return 3 * t * t; });
  CHECK(std::fabs(s.value - pfd_series(exact, pp, WeightFunction(), 0.0, 0.8).value) < 1e-7);
}

TEST_CASE("pfd_series cap") {
  const PowerParams pp(0.9, 1.0, 3.0);
  CHECK_THROWS_AS(pfd_series(sin_function(), pp, WeightFunction(), 0.0, 1.0, {}, 1e-15, 2), ConvergenceError);
}

TEST_CASE("pfi reductions") {
  const PowerParams zero(0.0, 0.7, 3.0);
  CHECK(pfi(sin_function(), zero, WeightFunction(), 0.0, 0.6) == std::sin(0.6));
  const PowerParams unit_p(0.4, 0.7, 1.0);
  CHECK(pfi(sin_function(), unit_p, WeightFunction(), 0.0, 0.6) == doctest::Approx(0.6 * std::sin(0.6)));
  const PowerParams pp(0.4, 0.7, 3.0);
  const double expected = pp.chi() + std::log(3.0) * pp.phi() * std::pow(0.6, 0.7) / std::tgamma(1.7);
  CHECK(std::fabs(pfi(constant_function(1.0), pp, WeightFunction(), 0.0, 0.6) - expected) < 1e-14);
}

TEST_CASE("iterated_pfi small orders") {
  const PowerParams pp(0.4, 0.9, kE);
  CHECK(iterated_pfi(square_function(), 0, pp, WeightFunction(), 0.0, 1.0) == 1.0);
  const double one = iterated_pfi(square_function(), 1, pp, exp_weight(1.0), 0.0, 1.0);
  CHECK(std::fabs(one - pfi(square_function(), pp, exp_weight(1.0), 0.0, 1.0)) < 1e-12);
  const double three = iterated_pfi(square_function(), 3, pp, WeightFunction(), 0.0, 1.0);
  CHECK(std::fabs(three - 0.41309519669260915284) < 1e-12);  // mpmath
  const double naive = verify::naive_iterated_pfi(square_function(), 3, 0.4, 0.9, kE, WeightFunction(), 0.0, 1.0);
  CHECK(std::fabs(three - naive) < 1e-6);
}

TEST_CASE("iterated_pfd small orders") {
  const PowerParams pp(0.4, 1.1, kE);
  CHECK(iterated_pfd(sin_function(), 0, pp, WeightFunction(), 0.0, 0.5) == std::sin(0.5));
  const double one = iterated_pfd(sin_function(), 1, pp, WeightFunction(), 0.0, 0.5);
  CHECK(std::fabs(one - pfd_quadrature(sin_function(), pp, WeightFunction(), 0.0, 0.5)) < 1e-10);
}

TEST_CASE("IteratedDerivative levels and resolution errors") {
  const PowerParams pp(0.4, 1.1, kE);
  IteratedDerivative d(square_function(), 2, pp, WeightFunction(), 0.0, 0.5, light());
  CHECK(d.order() == 2);
  CHECK(d.resolution_estimate() < 1e-6);
  const double level1 = d.level(1)(0.3);
  CHECK(std::fabs(level1 - pfd_quadrature(square_function(), pp, WeightFunction(), 0.0, 0.3)) < 1e-8);
  CHECK(d(0.0) == 0.0);

  IteratedConfig coarse;
  coarse.grid_density = 4.0;
  coarse.min_intervals = 8;
  coarse.resolution_tol = 1e-12;
  CHECK_THROWS_AS(iterated_pfd(sin_function(5.0), 2, PowerParams(0.9, 0.8, 3.0), WeightFunction(), 0.0, 1.0, light(),
                               kDefaultKernelTol, coarse),
                  ResolutionError);
}

TEST_CASE("composition identity") {
  CHECK(std::fabs(compose_identity_residual(constant_function(3.0), PowerParams(0.5, 1.5, 3.0), WeightFunction(), 0.0,
                                            1.0, light())) < 1e-14);
  CHECK(std::fabs(compose_identity_residual(exp_function(), PowerParams(0.5, 1.5, 3.0), WeightFunction(), 0.0, 1.0,
                                            light())) < 1e-6);
  CHECK(std::fabs(compose_identity_residual(sin_function(), PowerParams(0.5, 0.8, 1.0), quadratic_weight(1.0), 0.0, 1.0,
                                            light())) < 1e-12);
}

TEST_CASE("operators are linear") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const PowerParams pp(0.5, 0.8, 3.0);
  const WeightFunction w = quadratic_weight(1.0);
  const ScalarFunction f = sin_function();
  const ScalarFunction g = exp_function();
  for (int trial = 0; trial < 5; ++trial) {
    const double a = coef(rng);
    const double b = coef(rng);
    const ScalarFunction h = linear_combination(a, f, b, g);
    auto check = [&](auto op) { CHECK(std::fabs(op(h) - (a * op(f) + b * op(g))) < 1e-10); };
    check([&](const ScalarFunction& x) { return rl_integral(x, w, 0.8, 0.0, 1.0); });
    check([&](const ScalarFunction& x) { return pfd_quadrature(x, pp, w, 0.0, 1.0); });
    check([&](const ScalarFunction& x) { return pfd_series(x, pp, w, 0.0, 1.0).value; });
    check([&](const ScalarFunction& x) { return pfi(x, pp, w, 0.0, 1.0); });
    check([&](const ScalarFunction& x) { return iterated_pfi(x, 3, pp, w, 0.0, 1.0); });
  }
}

TEST_CASE("quadrature rule integrates polynomials and endpoint powers") {
  const CompositeRule rule(QuadratureConfig{});
  CHECK(std::fabs(rule.integrate([](double x) { return x * x * x; }, 2.0) - 4.0) < 1e-14);
  CHECK(std::fabs(rule.integrate([](double x) { return std::pow(x, 0.2); }, 1.0) - 1.0 / 1.2) < 1e-13);
  const CompositeRule single(QuadratureConfig{1, 8, true, 30});
  CHECK(std::fabs(single.integrate([](double x) { return std::pow(1.0 - x, 0.3); }, 1.0) - 1.0 / 1.3) < 1e-13);
  CHECK_THROWS_AS(CompositeRule(QuadratureConfig{0, 8, true, 0}), DomainError);
  CHECK_THROWS_AS(CompositeRule(QuadratureConfig{4, 1, true, 0}), DomainError);
}
