#pragma once

#include <optional>

#include "bregcut/linalg.hpp"
#include "bregcut/objectives.hpp"

namespace bregcut {

/// Halfspace { x : <a, x> <= beta }.
struct Halfspace {
  Vec a;
  double beta;
};

/// Halfspace cut through the gradient g = grad f(x):
///
///   a = g,   beta = <g, x> - ||g||^2 / L.
///
/// Every minimizer of f lies inside (the gradient of an L-smooth convex
/// function is 1/L-cocoercive), while x itself is separated by exactly
/// ||g||^2 / L.
Halfspace halfspace_from_gradient(const Vec& g, const Vec& x, double lipschitz);

/// Builds the cut at x from the objective's own gradient and cached L.
/// A zero gradient means x already minimizes f; that is reported as
/// std::nullopt rather than a degenerate halfspace.
std::optional<Halfspace> build_halfspace(const InnerObjective& obj, const Vec& x);

/// Membership up to residual_tol * max(1, |beta|, ||a|| ||x||).
bool contains(const Halfspace& h, const Vec& x, double residual_tol = 1e-9);

/// |<a, x> - beta| / max(1, |beta|, ||a|| ||x||); zero iff x lies on the
/// bounding hyperplane.
double hyperplane_residual(const Halfspace& h, const Vec& x);

}  // namespace bregcut
