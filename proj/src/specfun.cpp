#include "pfc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pfc/errors.hpp"

namespace pfc {
namespace {

// Largest x with Gamma(x) < DBL_MAX.
constexpr double kGammaOverflowArg = 171.62437695630272;

// tgammal stays finite well past this point; beyond it we go through lgammal.
constexpr long double kDirectGammaLimit = 1700.0L;

long double inverse_gamma_ld(long double x) {
  if (x < kDirectGammaLimit) return 1.0L / std::tgamma(x);
  return std::exp(-std::lgamma(x));
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be > 0, got " + std::to_string(x));
  if (x > kGammaOverflowArg) throw OverflowError("gamma: Gamma(" + std::to_string(x) + ") overflows");
  return std::tgamma(x);
}

MittagLefflerSeries::MittagLefflerSeries(double k, double l, std::size_t max_terms)
    : k_(k), l_(l), max_terms_(max_terms) {
  if (!(k > 0.0) || !(l > 0.0)) {
    throw DomainError("Mittag-Leffler series requires min(k, l) > 0");
  }
  if (max_terms == 0) throw DomainError("Mittag-Leffler series requires a positive term cap");
  first_term_ = inverse_gamma_ld(static_cast<long double>(l));
}

long double MittagLefflerSeries::ratio(std::size_t n) {
  while (ratios_.size() < n) {
    const auto m = static_cast<long double>(ratios_.size());
    const long double z = static_cast<long double>(k_) * m + l_;
    const long double z_next = z + k_;
    long double r;
    if (z_next < kDirectGammaLimit) {
      r = std::tgamma(z) / std::tgamma(z_next);
    } else {
      r = std::exp(std::lgamma(z) - std::lgamma(z_next));
    }
    ratios_.push_back(r);
  }
  return ratios_[n - 1];
}

SeriesResult MittagLefflerSeries::evaluate(double z, double tol) {
  if (!(tol > 0.0)) throw DomainError("Mittag-Leffler series requires tol > 0");
  if (std::isnan(z)) throw DomainError("Mittag-Leffler series argument is NaN");

  const long double zl = z;
  long double sum = first_term_;
  long double current = zl * first_term_ * ratio(1);  // t_1
  for (std::size_t n = 1;; ++n) {
    if (n >= max_terms_) {
      throw ConvergenceError("Mittag-Leffler series: no convergence within " +
                             std::to_string(max_terms_) + " terms (z = " + std::to_string(z) + ")");
    }
    const long double next = current * zl * ratio(n + 1);  // t_{n+1}
    const long double mag = std::fabs(current);
    if (!std::isfinite(mag) || !std::isfinite(static_cast<double>(sum))) {
      throw OverflowError("Mittag-Leffler series: terms overflow (z = " + std::to_string(z) + ")");
    }
    if (mag < tol && std::fabs(next) <= mag) {
      return SeriesResult{static_cast<double>(sum), n, static_cast<double>(mag), false};
    }
    sum += current;
    current = next;
  }
}

PowerMittagLeffler::PowerMittagLeffler(double k, double l, double p, std::size_t max_terms)
    : series_(k, l, max_terms), log_p_(0.0) {
  if (!(p > 0.0)) throw DomainError("power Mittag-Leffler function requires p > 0");
  // The argument tau * ln p is formed in double so p and e with tau * ln p sum the same series.
  log_p_ = std::log(p);
}

SeriesResult PowerMittagLeffler::evaluate(double tau, double tol) {
  return series_.evaluate(tau * log_p_, tol);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * static_cast<double>(n - k + j) / static_cast<double>(j);
  return std::round(c);
}

SeriesResult power_ml(double k, double l, double p, double tau, double tol, std::size_t max_terms) {
  PowerMittagLeffler ml(k, l, p, max_terms);
  return ml.evaluate(tau, tol);
}

}  // namespace pfc
