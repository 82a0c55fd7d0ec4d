#pragma once

#include <cstddef>
#include <vector>

namespace pfc {

/// Composite Gauss-Legendre configuration.
///
/// The interval is cut into `panels` uniform panels with `nodes_per_panel`
/// Gauss-Legendre nodes each. The two end panels are further split
/// geometrically (halving `grading_levels` times) towards the interval ends,
/// where the fractional kernels and their integrands behave like powers of
/// the distance to the endpoint.
struct QuadratureConfig {
  std::size_t panels = 256;
  std::size_t nodes_per_panel = 8;
  /// Power-kernel singularities of Riemann-Liouville integrals are removed by
  /// u = (t - tau)^beta when the order is below one.
  bool singularity_substitution = true;
  std::size_t grading_levels = 30;

  /// Throws DomainError unless panels >= 1 and nodes_per_panel >= 2.
  void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// Nodes x_i in (0, 1) and weights w_i with Sum w_i g(x_i) ~ int_0^1 g.
/// Built once per configuration and rescaled to any [0, L].
class CompositeRule {
 public:
  explicit CompositeRule(const QuadratureConfig& config);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }

  /// int_0^length g(s) ds; accumulated in extended precision in node order.
  template <class F>
  double integrate(F&& g, double length) const {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      acc += static_cast<long double>(weights_[i]) * g(length * nodes_[i]);
    }
    return static_cast<double>(acc * length);
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace pfc
