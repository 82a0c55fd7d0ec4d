#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "pfc/errors.hpp"
#include "pfc/interpolation.hpp"
#include "pfc/operators.hpp"
#include "pfc/params.hpp"
#include "pfc/verify.hpp"

namespace pfc::verify {
namespace {

void check_limits(double a, double t) {
  if (!std::isfinite(a) || !std::isfinite(t)) throw DomainError("oracle limits must be finite");
  if (t < a) throw DomainError("oracle upper limit lies below the lower limit");
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("oracle alpha must lie in [0, 1)");
}

// Composite Simpson on [0, length] with an even number of panels.
template <class F>
long double simpson(F&& g, double length, std::size_t panels) {
  if (panels % 2 == 1) ++panels;
  const long double h = static_cast<long double>(length) / static_cast<long double>(panels);
  long double acc = g(0.0) + g(length);
  for (std::size_t i = 1; i < panels; ++i) {
    const double x = static_cast<double>(h * static_cast<long double>(i));
    acc += (i % 2 == 1 ? 4.0L : 2.0L) * g(x);
  }
  return acc * h / 3.0L;
}

class MittagLefflerTable {
 public:
  explicit MittagLefflerTable(double alpha) : alpha_(alpha) {}

  long double operator()(long double z) {
    long double sum = 0.0L;
    long double zk = 1.0L;
    for (std::size_t k = 0; k < 5000; ++k) {
      const long double term = zk * coefficient(k);
      sum += term;
      if (k > 2 && std::fabs(term) < 1e-22L * std::max(1.0L, std::fabs(sum)) &&
          std::fabs(z) * coefficient(k + 1) <= coefficient(k)) {
        return sum;
      }
      zk *= z;
    }
    throw ConvergenceError("reference Mittag-Leffler summation did not converge");
  }

 private:
  long double coefficient(std::size_t k) {
    while (inv_gamma_.size() <= k) {
      const long double x = static_cast<long double>(alpha_) * static_cast<long double>(inv_gamma_.size()) + 1.0L;
      inv_gamma_.push_back(std::exp(-std::lgamma(x)));  // x >= 1, Gamma(x) > 0
    }
    return inv_gamma_[k];
  }

  double alpha_;
  std::vector<long double> inv_gamma_;
};

}  // namespace

double oracle_rl_integral(const ScalarFunction& f, const WeightFunction& w, double order, double a, double t,
                          std::size_t panels) {
  check_limits(a, t);
  if (!(order > 0.0)) throw DomainError("oracle order must be > 0");
  if (panels < 1) throw DomainError("oracle needs at least one panel");
  if (t == a) return 0.0;
  // tau = t - u^(1/order): (t - tau)^(order-1) dtau = du / order.
  const double upper = std::pow(t - a, order);
  const double inv = 1.0 / order;
  auto g = [&](double u) {
    const double tau = t - std::pow(u, inv);
    return w.value(tau) * f(tau);
  };
  const long double h = static_cast<long double>(upper) / static_cast<long double>(panels);
  long double acc = 0.5L * (g(0.0) + g(upper));
  for (std::size_t i = 1; i < panels; ++i) acc += g(static_cast<double>(h * static_cast<long double>(i)));
  const long double integral = acc * h;
  return static_cast<double>(integral / (static_cast<long double>(order) * std::tgamma(order) * w.value(t)));
}

double reference_caputo_fabrizio(const ScalarFunction& f, double alpha, double a, double t, std::size_t panels) {
  check_limits(a, t);
  check_alpha(alpha);
  if (t == a) return 0.0;
  const double chi = 1.0 - alpha;
  const double mu = alpha / (1.0 - alpha);
  const long double integral = simpson([&](double s) { return std::exp(-mu * s) * f.derivative(t - s); }, t - a, panels);
  return static_cast<double>(integral / chi);
}

double reference_weighted_atangana_baleanu(const ScalarFunction& f, const WeightFunction& w, double alpha, double a,
                                           double t, std::size_t panels) {
  check_limits(a, t);
  check_alpha(alpha);
  if (t == a) return 0.0;
  const double chi = 1.0 - alpha;
  const double mu = alpha / (1.0 - alpha);
  const double length = t - a;
  MittagLefflerTable ml(alpha);
  // s = length v^10 clusters the nodes where the kernel behaves like s^alpha.
  auto g = [&](double v) {
    const double v9 = std::pow(v, 9.0);
    const double s = length * v9 * v;
    const double tau = t - s;
    const long double kernel = ml(-static_cast<long double>(mu) * std::pow(static_cast<long double>(s), alpha));
    const double weighted = w.derivative(tau) * f(tau) + w.value(tau) * f.derivative(tau);
    return kernel * weighted * 10.0 * length * v9;
  };
  const long double integral = simpson(g, 1.0, panels);
  return static_cast<double>(integral / (chi * w.value(t)));
}

double reference_atangana_baleanu(const ScalarFunction& f, double alpha, double a, double t, std::size_t panels) {
  return reference_weighted_atangana_baleanu(f, WeightFunction::unit(), alpha, a, t, panels);
}

double reference_mittag_leffler(double alpha, double z) {
  if (!(alpha > 0.0)) throw DomainError("reference Mittag-Leffler needs alpha > 0");
  MittagLefflerTable ml(alpha);
  return static_cast<double>(ml(z));
}

double naive_iterated_pfi(const ScalarFunction& f, int n, double alpha, double beta, double p,
                          const WeightFunction& w, double a, double t, const NaiveIterationConfig& config) {
  check_limits(a, t);
  if (n < 0) throw DomainError("iteration count must be >= 0");
  if (config.intervals < 3) throw DomainError("naive iteration grid needs at least three intervals");
  const PowerParams pp(alpha, beta, p);
  if (n == 0) return f(t);
  if (t == a) {
    double v = f(t);
    for (int k = 0; k < n; ++k) v *= pp.chi();
    return v;
  }

  std::vector<double> grid(config.intervals + 1);
  for (std::size_t i = 0; i <= config.intervals; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(config.intervals);
    grid[i] = a + (t - a) * std::pow(x, config.grading);
  }
  grid.back() = t;

  ScalarFunction level = f;
  for (int k = 1; k < n; ++k) {
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = pfi(level, pp, w, a, grid[i], config.quadrature);
    level = CubicInterpolant(grid, std::move(values)).as_function();
  }
  return pfi(level, pp, w, a, t, config.quadrature);
}

}  // namespace pfc::verify
