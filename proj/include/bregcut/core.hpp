#pragma once

#include <vector>

#include "bregcut/kernels.hpp"
#include "bregcut/linalg.hpp"

namespace bregcut {

/// Numerical tolerances shared across the solver stack. All values must be
/// strictly positive.
struct Tolerances {
  /// Stopping threshold on ||grad f(x_k)||.
  double grad_tol = 1e-9;
  /// Slack for hyperplane membership and identity checks.
  double residual_tol = 1e-9;
  /// Relative bracket width for the exact-step bisection.
  double bisection_tol = 1e-12;
};

void validate(const Tolerances& tol);

/// Primal point together with the dual vector that generated it. The solver
/// maintains x = mirror_map(x_star) at all times.
struct PrimalDualPair {
  Vec x;
  Vec x_star;
};

PrimalDualPair make_pair_from_dual(const Kernel& kernel, Vec x_star);
bool mirror_consistent(const Kernel& kernel, const PrimalDualPair& pair,
                       double rel_tol = 1e-12);

/// Bregman distance D(y, x) induced by the kernel, where x is represented by
/// a subgradient x_star (x = mirror_map(x_star)). Computed in conjugate form
///
///   D = w*(x_star) - <x_star, y> + w(y),
///
/// which needs no subdifferential bookkeeping at y. Fenchel-Young makes the
/// value nonnegative; roundoff-scale negatives are clamped to zero and
/// anything worse raises an error.
double bregman_distance(const Kernel& kernel, const Vec& y, const Vec& x_star);

/// Residual of the three-point identity
///
///   D(u, p) - D(u, q) + D(p, q) = <q_star - p_star, u - p>
///
/// with p = mirror_map(p_star), q = mirror_map(q_star). Exact arithmetic
/// gives zero for every triple.
double three_point_residual(const Kernel& kernel, const Vec& u,
                            const Vec& p_star, const Vec& q_star);

/// Variational-inequality test for a Bregman projection candidate z with
/// subgradient z_star, projected from the point represented by x_star:
///
///   <z_star - x_star, y - z> >= 0   for all y in the target set.
///
/// Checks the inequality against every provided sample (all of which must lie
/// in the set), allowing -residual_tol * scale of slack per sample.
bool check_projection_vi(const Kernel& kernel, const Vec& x_star, const Vec& z,
                         const Vec& z_star, const std::vector<Vec>& samples,
                         double residual_tol = 1e-9);

}  // namespace bregcut
