#pragma once

#include <functional>

namespace pfc {

/// Normalization function N(alpha) of the power fractional operators.
using Normalization = std::function<double(double)>;

/// Parameter bundle (alpha, beta, p, N) shared by every power fractional operator.
///
/// Derived quantities:
///   chi = (1 - alpha) / N(alpha),  phi = alpha / N(alpha),  mu = alpha / (1 - alpha).
class PowerParams {
 public:
  /// Throws DomainError unless 0 <= alpha < 1, beta > 0, p > 0 and N(alpha) > 0.
  /// An empty normalization means N == 1.
  PowerParams(double alpha, double beta, double p, Normalization normalization = {});

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double p() const { return p_; }
  double log_p() const { return log_p_; }
  double normalization_value() const { return n_alpha_; }

  double chi() const { return (1.0 - alpha_) / n_alpha_; }
  double phi() const { return alpha_ / n_alpha_; }
  double mu() const { return alpha_ / (1.0 - alpha_); }

  /// ln p * phi, the coefficient of the Riemann-Liouville part of the integral.
  double integral_coupling() const { return log_p_ * phi(); }
  /// -mu ln p, the argument scale of the derivative kernel series.
  double kernel_rate() const { return -mu() * log_p_; }

 private:
  double alpha_;
  double beta_;
  double p_;
  double log_p_;
  double n_alpha_;
};

}  // namespace pfc
