#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pfc/errors.hpp"
#include "pfc/taylor.hpp"

using namespace pfc;

namespace {

const RegisteredFunction kSin{RegisteredKind::sin_delta, 1.0};
const RegisteredFunction kExp{RegisteredKind::exp_delta, 1.0};

TaylorOptions light() {
  TaylorOptions o;
  o.quadrature = QuadratureConfig{32, 8, true, 12};
  return o;
}

}  // namespace

TEST_CASE("weight polynomial values") {
  const PowerParams pp(0.1, 1.5, 2.0);
  CHECK(weight_polynomial(0, pp, 0.7) == 1.0);
  CHECK(weight_polynomial(0, pp, 0.0) == 1.0);
  const double w1 = pp.chi() + pp.log_p() * pp.phi() * std::pow(0.7, 1.5) / std::tgamma(2.5);
  CHECK(weight_polynomial(1, pp, 0.7) == doctest::Approx(w1).epsilon(1e-15));
  // mpmath, 40 digits.
  CHECK(std::fabs(weight_polynomial(2, pp, 1.0) - 0.90465669561617707675) < 1e-15);
  CHECK(std::fabs(weight_polynomial(3, pp, 0.5) - 0.77406770213282276408) < 1e-15);
  for (int l = 0; l <= 6; ++l) {
    CHECK(weight_polynomial(l, pp, 0.0) == doctest::Approx(std::pow(pp.chi(), l)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(weight_polynomial(-1, pp, 0.1), DomainError);
  CHECK_THROWS_AS(weight_polynomial(1, pp, -0.1), DomainError);
}

TEST_CASE("approximant sources") {
  const PowerParams pp(0.1, 1.5, 2.0);
  const WeightFunction w = exp_weight(1.0);
  const ScalarFunction f = sin_function();
  const double a = 0.2;
  const double t = 0.9;
  const double base = w.value(a) * f(a) / w.value(t);

  SUBCASE("order zero") {
    CHECK(approximant(f, 0, pp, w, a, DerivativeSource::numeric, t) == doctest::Approx(base).epsilon(1e-15));
  }
  SUBCASE("numeric derivatives vanish at the base") {
    const TaylorApproximant approx = build_approximant(f, 3, pp, w, a, DerivativeSource::numeric, light());
    REQUIRE(approx.derivs_at_base.size() == 4);
    CHECK(approx.derivs_at_base[0] == f(a));
    for (int l = 1; l <= 3; ++l) CHECK(approx.derivs_at_base[l] == 0.0);
    CHECK(approx(t) == doctest::Approx(base).epsilon(1e-15));
    CHECK(approx(a) == f(a));
  }
  SUBCASE("user supplied") {
    const TaylorApproximant approx = build_approximant({f(a), 0.3, -0.1}, pp, w, a);
    CHECK(approx.order == 2);
    CHECK(approx.source == DerivativeSource::user_supplied);
    CHECK(approx(a) == doctest::Approx(f(a) + 0.3 * pp.chi() - 0.1 * pp.chi() * pp.chi()));
    CHECK_THROWS_AS(build_approximant(f, 2, pp, w, a, DerivativeSource::user_supplied), DomainError);
  }
  SUBCASE("closed form needs a registered function and unit weight") {
    CHECK_THROWS_AS(build_approximant(f, 2, pp, WeightFunction(), 0.0, DerivativeSource::closed_form),
                    DerivativeUnavailableError);
    CHECK_THROWS_AS(build_approximant(kSin, 2, pp, w, 0.0, DerivativeSource::closed_form),
                    DerivativeUnavailableError);
  }
}

TEST_CASE("closed-form approximant matches the frozen double sum") {
  const PowerParams pp(0.1, 1.5, 2.0);
  const double value = approximant(kSin, 2, pp, WeightFunction(), 0.0, DerivativeSource::closed_form, 0.5);
  CHECK(std::fabs(value - 0.19520513788429917456) < 1e-14);
}

TEST_CASE("closed-form approximant at the base is not f(a)") {
  // W_l(0) D^l f(a) = chi^l D^l f(a) with nonzero Liouville-sense derivatives.
  const PowerParams pp(0.1, 1.5, 2.0);
  const TaylorApproximant approx = build_approximant(kSin, 2, pp, WeightFunction(), 0.0, DerivativeSource::closed_form);
  double expected = 0.0;
  for (int l = 0; l <= 2; ++l) expected += approx.derivs_at_base[l] * std::pow(pp.chi(), l);
  CHECK(approx(0.0) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(std::fabs(approx(0.0) - std::sin(0.0)) > 0.1);
}

TEST_CASE("remainder") {
  const PowerParams unit_p(0.3, 1.2, 1.0);
  const double lambda = 0.4;
  const double expected = std::sin(lambda) / std::pow(unit_p.chi(), 3) * std::pow(unit_p.chi(), 3);
  CHECK(remainder(kSin, 2, unit_p, WeightFunction(), 0.0, 0.9, lambda, DerivativeSource::closed_form) ==
        doctest::Approx(expected).epsilon(1e-14));
  const PowerParams pp(0.3, 1.2, 2.0);
  CHECK_THROWS_AS(remainder(kSin, 1, pp, WeightFunction(), 0.0, 0.5, 0.6, DerivativeSource::closed_form), DomainError);
  CHECK_THROWS_AS(remainder(kSin, 1, pp, WeightFunction(), 0.0, 0.5, 0.2, DerivativeSource::user_supplied),
                  DerivativeUnavailableError);
  // Numeric source at lambda = a: every derivative level vanishes there.
  CHECK(remainder(sin_function(), 1, pp, WeightFunction(), 0.0, 0.5, 0.0, DerivativeSource::numeric, light()) == 0.0);
}

TEST_CASE("mean value residual") {
  const PowerParams pp(0.3, 1.2, 2.0);
  for (double lambda : {0.0, 0.4, 1.0}) {
    CHECK(mvt_residual(constant_function(2.0), pp, WeightFunction(), 0.0, 1.0, lambda) == 0.0);
  }
  CHECK(mvt_residual(exp_function(), pp, WeightFunction(), 0.3, 0.3, 0.3) == 0.0);

  const RootSearch root = find_first_root(
      [&](double lambda) { return mvt_residual(exp_function(), pp, WeightFunction(), 0.0, 1.0, lambda); }, 0.0, 1.0);
  REQUIRE(root.lambda.has_value());
  CHECK(std::fabs(*root.lambda - 0.90850353486081259016) < 1e-8);  // mpmath root
  CHECK(std::fabs(root.residual) < 1e-8);
}

TEST_CASE("mean value point does not exist for p < 1 and monotone derivatives") {
  const PowerParams pp(0.5, 1.0, 0.5);
  const RootSearch root = find_first_root(
      [&](double lambda) { return mvt_residual(identity_function(), pp, WeightFunction(), 0.0, 1.0, lambda, light()); },
      0.0, 1.0);
  CHECK_FALSE(root.lambda.has_value());
  CHECK_FALSE(root.identically_small);
  CHECK(root.best_x == 1.0);
}

TEST_CASE("telescoping identity") {
  const PowerParams pp(0.4, 1.1, std::numbers::e);
  CHECK(std::fabs(telescoping_check(square_function(), 0, pp, WeightFunction(), 0.0, 0.5, light())) < 1e-6);
  CHECK(std::fabs(telescoping_check(square_function(), 1, pp, WeightFunction(), 0.0, 0.5, light())) < 1e-5);
  CHECK(std::fabs(telescoping_check(constant_function(1.5), 1, pp, WeightFunction(), 0.0, 0.5, light())) < 1e-14);
  // n = 0 is the composition residual with the opposite sign.
  const double tele = telescoping_check(sin_function(), 0, pp, exp_weight(1.0), 0.0, 0.5, light());
  const double comp = compose_identity_residual(sin_function(), pp, exp_weight(1.0), 0.0, 0.5, light().quadrature);
  CHECK(std::fabs(tele + comp) < 1e-12);
}

TEST_CASE("root search") {
  const RootSearch exact = find_first_root([](double x) { return x - 0.5; }, 0.0, 1.0);
  REQUIRE(exact.lambda.has_value());
  CHECK(*exact.lambda == 0.5);
  const RootSearch first = find_first_root([](double x) { return std::sin(10.0 * x) + 0.05; }, 0.0, 1.0);
  REQUIRE(first.lambda.has_value());
  CHECK(std::fabs(*first.lambda - (std::numbers::pi + std::asin(0.05)) / 10.0) < 1e-9);
  const RootSearch flat = find_first_root([](double) { return 1e-12; }, 0.0, 1.0);
  CHECK_FALSE(flat.lambda.has_value());
  CHECK(flat.identically_small);
}
