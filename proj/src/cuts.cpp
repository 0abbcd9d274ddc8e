#include "bregcut/cuts.hpp"

#include <cmath>
#include <stdexcept>

namespace bregcut {

Halfspace halfspace_from_gradient(const Vec& g, const Vec& x, double lipschitz) {
  if (g.size() != x.size()) {
    throw std::invalid_argument("halfspace_from_gradient: size mismatch");
  }
  if (lipschitz <= 0.0 || !std::isfinite(lipschitz)) {
    throw std::invalid_argument("halfspace_from_gradient: bad Lipschitz constant");
  }
  const double g2 = dot(g, g);
  if (g2 == 0.0) {
    throw std::invalid_argument("halfspace_from_gradient: zero gradient");
  }
  return Halfspace{g, dot(g, x) - g2 / lipschitz};
}

std::optional<Halfspace> build_halfspace(const InnerObjective& obj, const Vec& x) {
  Vec g = obj.gradient(x);
  const double g2 = dot(g, g);
  if (g2 == 0.0) return std::nullopt;  // x already minimizes f
  const double beta = dot(g, x) - g2 / obj.lipschitz();
  return Halfspace{std::move(g), beta};
}

namespace {

double membership_scale(const Halfspace& h, const Vec& x) {
  return std::max({1.0, std::abs(h.beta), norm2(h.a) * norm2(x)});
}

}  // namespace

bool contains(const Halfspace& h, const Vec& x, double residual_tol) {
  return dot(h.a, x) <= h.beta + residual_tol * membership_scale(h, x);
}

double hyperplane_residual(const Halfspace& h, const Vec& x) {
  return std::abs(dot(h.a, x) - h.beta) / membership_scale(h, x);
}

}  // namespace bregcut
