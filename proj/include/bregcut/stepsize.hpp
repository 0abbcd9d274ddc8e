#pragma once

#include "bregcut/kernels.hpp"
#include "bregcut/linalg.hpp"
#include "bregcut/objectives.hpp"

namespace bregcut {

/// Step-size selection for the cut-and-project update. Three rules:
///
///   exact     minimize the one-dimensional dual of the Bregman projection
///             over (0, mu/L] by bisection on its monotone derivative
///   constant  a fixed t, valid in (0, 2 mu/L) for convergent runs
///   dynamic   the residual ratio ||r||^2 / ||A^T r||^2, never below mu/L
struct StepSizeRule {
  enum class Kind { kExact, kConstant, kDynamic };

  static StepSizeRule exact() { return {Kind::kExact, 0.0}; }
  static StepSizeRule constant(double t) { return {Kind::kConstant, t}; }
  static StepSizeRule dynamic() { return {Kind::kDynamic, 0.0}; }

  Kind kind;
  /// Fixed step for kConstant; ignored otherwise.
  double t;
};

/// Dual objective of the Bregman projection onto { x : <a, x> <= beta } from
/// the point with subgradient x_star:
///
///   g(t) = w*(x_star - t a) + beta t,   t >= 0.
///
/// Convex in t; its minimizer recovers the projection as
/// mirror_map(x_star - t a).
double dual_objective(const Kernel& kernel, const Vec& x_star, const Vec& a,
                      double beta, double t);

/// g'(t) = -<a, mirror_map(x_star - t a)> + beta. Nondecreasing in t, and
/// strictly negative at t = 0 for cuts built from a nonzero gradient.
double dual_derivative(const Kernel& kernel, const Vec& x_star, const Vec& a,
                       double beta, double t);

/// Minimizer of g over (0, mu/L]: returns mu/L outright when g'(mu/L) <= 0,
/// otherwise bisects g' on [0, mu/L] down to a bracket of relative width
/// bisection_tol and returns the midpoint.
double exact_step(const Kernel& kernel, const Vec& x_star, const Vec& a,
                  double beta, double mu, double lipschitz,
                  double bisection_tol = 1e-12);

/// ||r(x)||^2 / ||A^T r(x)||^2 for the objective's residual r. Throws when
/// the residual vanishes (the iterate already minimizes f).
double dynamic_step(const InnerObjective& obj, const Vec& x);

}  // namespace bregcut
