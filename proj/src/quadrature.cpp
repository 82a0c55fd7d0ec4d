#include "pfc/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "pfc/errors.hpp"

namespace pfc {

void QuadratureConfig::validate() const {
  if (panels < 1) throw DomainError("quadrature needs at least one panel");
  if (nodes_per_panel < 2) throw DomainError("quadrature needs at least two nodes per panel");
}

GaussLegendreRule gauss_legendre(std::size_t n) {
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Tricomi initial guess.
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / static_cast<double>(j);
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / static_cast<double>(j);
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

CompositeRule::CompositeRule(const QuadratureConfig& config) {
  config.validate();
  const GaussLegendreRule gl = gauss_legendre(config.nodes_per_panel);
  auto add_panel = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
      nodes_.push_back(mid + half * gl.nodes[k]);
      weights_.push_back(half * gl.weights[k]);
    }
  };

  const double h = 1.0 / static_cast<double>(config.panels);
  const std::size_t levels = config.grading_levels;
  // Left end: [0, h 2^-L], [h 2^-L, h 2^-(L-1)], ..., [h/2, h].
  auto add_graded = [&](double lo, double hi, bool toward_lo) {
    if (levels == 0) {
      add_panel(lo, hi);
      return;
    }
    const double width = hi - lo;
    if (toward_lo) {
      double edge = width * std::ldexp(1.0, -static_cast<int>(levels));
      add_panel(lo, lo + edge);
      for (std::size_t j = 0; j < levels; ++j) {
        add_panel(lo + edge, lo + 2.0 * edge);
        edge *= 2.0;
      }
    } else {
      double edge = 0.5 * width;
      double start = lo;
      for (std::size_t j = 0; j < levels; ++j) {
        add_panel(start, start + edge);
        start += edge;
        edge *= 0.5;
      }
      add_panel(start, hi);
    }
  };

  if (config.panels == 1) {
    // A single panel graded towards both ends through its midpoint.
    add_graded(0.0, 0.5, true);
    add_graded(0.5, 1.0, false);
    return;
  }
  add_graded(0.0, h, true);
  for (std::size_t j = 1; j + 1 < config.panels; ++j) {
    add_panel(static_cast<double>(j) * h, static_cast<double>(j + 1) * h);
  }
  add_graded(1.0 - h, 1.0, false);
}

}  // namespace pfc
