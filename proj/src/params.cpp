#include "pfc/params.hpp"

#include <cmath>
#include <string>

#include "pfc/errors.hpp"

namespace pfc {

PowerParams::PowerParams(double alpha, double beta, double p, Normalization normalization)
    : alpha_(alpha), beta_(beta), p_(p), log_p_(0.0), n_alpha_(1.0) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in [0, 1), got " + std::to_string(alpha));
  }
  if (!(beta > 0.0)) throw DomainError("beta must be > 0, got " + std::to_string(beta));
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("p must be > 0, got " + std::to_string(p));
  if (normalization) {
    if (std::fabs(normalization(0.0) - 1.0) > 1e-12) throw DomainError("normalization must satisfy N(0) = 1");
    n_alpha_ = normalization(alpha);
  }
  if (!(n_alpha_ > 0.0) || !std::isfinite(n_alpha_)) {
    throw DomainError("normalization N(alpha) must be > 0, got " + std::to_string(n_alpha_));
  }
  log_p_ = std::log(p);
}

}  // namespace pfc
