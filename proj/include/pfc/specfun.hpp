#pragma once

#include <cstddef>
#include <vector>

namespace pfc {

/// Partial sum of an infinite series together with its truncation data.
struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  /// Magnitude of the first omitted term.
  double tail_estimate = 0.0;
  /// Set when a derivative entering the series came from the finite-difference fallback.
  bool derivative_fallback = false;
};

inline constexpr std::size_t kDefaultSeriesCap = 10'000;

/// Real Gamma function for x > 0.
/// Throws DomainError for x <= 0 (or NaN) and OverflowError once Gamma(x)
/// exceeds the double range (x > 171.62...).
double gamma(double x);

/// Sum_{n>=0} z^n / Gamma(k n + l), the two-parameter Mittag-Leffler series.
///
/// Terms are generated by the recursion t_{n+1} = t_n * z * Gamma(kn+l)/Gamma(kn+k+l)
/// in extended precision, so neither z^n nor Gamma(kn+l) is ever formed on
/// its own. The Gamma ratios depend only on (k, l) and are cached, which makes
/// repeated evaluation at many arguments cheap (quadrature kernels).
///
/// Truncation: the sum stops before the first index n >= 1 with |t_n| < tol
/// and |t_{n+1}| <= |t_n|. That term is reported as the tail estimate.
///
/// Instances keep a growable cache and must not be shared between threads.
class MittagLefflerSeries {
 public:
  MittagLefflerSeries(double k, double l, std::size_t max_terms = kDefaultSeriesCap);

  SeriesResult evaluate(double z, double tol);

  double k() const { return k_; }
  double l() const { return l_; }

 private:
  long double ratio(std::size_t n);

  double k_;
  double l_;
  std::size_t max_terms_;
  long double first_term_;
  // ratios_[n-1] = Gamma(k(n-1)+l) / Gamma(kn+l)
  std::vector<long double> ratios_;
};

/// Power Mittag-Leffler function pE_{k,l}(tau) = Sum (tau ln p)^n / Gamma(kn+l).
/// Wraps MittagLefflerSeries with the argument tau * ln p.
class PowerMittagLeffler {
 public:
  PowerMittagLeffler(double k, double l, double p, std::size_t max_terms = kDefaultSeriesCap);

  SeriesResult evaluate(double tau, double tol);

  double log_p() const { return log_p_; }

 private:
  MittagLefflerSeries series_;
  double log_p_;
};

/// Binomial coefficient C(n, k) in floating point; 0 outside 0 <= k <= n.
double binomial(int n, int k);

/// One-shot evaluation of pE_{k,l}(tau).
/// Throws DomainError for invalid parameters and ConvergenceError when the
/// cap is hit before the truncation criterion fires.
SeriesResult power_ml(double k, double l, double p, double tau, double tol,
                      std::size_t max_terms = kDefaultSeriesCap);

}  // namespace pfc
