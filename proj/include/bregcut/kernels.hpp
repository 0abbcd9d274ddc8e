#pragma once

#include <optional>

#include "bregcut/linalg.hpp"

namespace bregcut {

/// Componentwise soft shrinkage sign(v) * max(|v| - lambda, 0).
Vec soft_shrink(const Vec& v, double lambda);
double soft_shrink_scalar(double v, double lambda);

namespace detail {

// Validation-free shrinkage for hot loops whose lambda was checked once up
// front (kernel construction validates it).
inline double shrink(double v, double lambda) {
  if (v > lambda) return v - lambda;
  if (v < -lambda) return v + lambda;
  return 0.0;
}

}  // namespace detail

/// Strongly convex distance-generating kernel. Two kinds are supported:
///
///   elastic net  w(x) = lambda * ||x||_1 + 0.5 * ||x||^2
///   quadratic    w(x) = 0.5 * ||x||^2
///
/// Both are 1-strongly convex, so mu() is always 1. The conjugate of the
/// elastic-net kernel is w*(v) = 0.5 * ||soft_shrink(v, lambda)||^2 and its
/// gradient (the mirror map) is the shrinkage itself; the quadratic kernel is
/// self-conjugate with the identity mirror map.
class Kernel {
 public:
  enum class Kind { kQuadratic, kElasticNet };

  static Kernel quadratic();
  static Kernel elastic_net(double lambda);

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }

  /// Strong-convexity modulus of w.
  double mu() const { return 1.0; }

  /// Gradient Lipschitz constant of w when w is smooth: 1 for the quadratic
  /// kernel (and elastic net with lambda = 0), absent otherwise.
  std::optional<double> grad_lipschitz() const;

  double value(const Vec& x) const;
  double conjugate_value(const Vec& x_star) const;

  /// grad w*(x_star); maps dual iterates back to primal points.
  Vec mirror_map(const Vec& x_star) const;

  /// A canonical element of the subdifferential of w at x0. Zero components
  /// of x0 get subgradient component 0, so mirror_map(initial_subgradient(x))
  /// always reproduces x.
  Vec initial_subgradient(const Vec& x0) const;

 private:
  Kernel(Kind kind, double lambda) : kind_(kind), lambda_(lambda) {}

  Kind kind_;
  double lambda_;
};

}  // namespace bregcut
