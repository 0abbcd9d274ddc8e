#include "bregcut/core.hpp"

#include <cmath>
#include <stdexcept>

namespace bregcut {

void validate(const Tolerances& tol) {
  const bool ok = tol.grad_tol > 0.0 && std::isfinite(tol.grad_tol) &&
                  tol.residual_tol > 0.0 && std::isfinite(tol.residual_tol) &&
                  tol.bisection_tol > 0.0 && std::isfinite(tol.bisection_tol);
  if (!ok) {
    throw std::invalid_argument("Tolerances: all fields must be strictly positive");
  }
}

PrimalDualPair make_pair_from_dual(const Kernel& kernel, Vec x_star) {
  PrimalDualPair pair;
  pair.x = kernel.mirror_map(x_star);
  pair.x_star = std::move(x_star);
  return pair;
}

bool mirror_consistent(const Kernel& kernel, const PrimalDualPair& pair,
                       double rel_tol) {
  if (pair.x.size() != pair.x_star.size()) return false;
  const Vec mapped = kernel.mirror_map(pair.x_star);
  const double err = norm2(subtract(pair.x, mapped));
  const double scale = std::max({1.0, norm2(pair.x), norm2(mapped)});
  return err <= rel_tol * scale;
}

double bregman_distance(const Kernel& kernel, const Vec& y, const Vec& x_star) {
  if (y.size() != x_star.size()) {
    throw std::invalid_argument("bregman_distance: size mismatch");
  }
  const double conj = kernel.conjugate_value(x_star);
  const double ip = dot(x_star, y);
  const double val = kernel.value(y);
  const double d = conj - ip + val;
  if (!std::isfinite(d)) {
    throw std::runtime_error("bregman_distance: non-finite value");
  }
  if (d < 0.0) {
    const double scale =
        std::max(1.0, std::abs(conj) + std::abs(ip) + std::abs(val));
    if (d >= -1e-12 * scale) return 0.0;
    throw std::runtime_error("bregman_distance: negative beyond roundoff");
  }
  return d;
}

double three_point_residual(const Kernel& kernel, const Vec& u,
                            const Vec& p_star, const Vec& q_star) {
  if (u.size() != p_star.size() || u.size() != q_star.size()) {
    throw std::invalid_argument("three_point_residual: size mismatch");
  }
  const Vec p = kernel.mirror_map(p_star);
  const double d_up = bregman_distance(kernel, u, p_star);
  const double d_uq = bregman_distance(kernel, u, q_star);
  const double d_pq = bregman_distance(kernel, p, q_star);
  const double rhs = dot(subtract(q_star, p_star), subtract(u, p));
  return std::abs(d_up - d_uq + d_pq - rhs);
}

bool check_projection_vi(const Kernel& kernel, const Vec& x_star, const Vec& z,
                         const Vec& z_star, const std::vector<Vec>& samples,
                         double residual_tol) {
  if (samples.empty()) {
    throw std::invalid_argument("check_projection_vi: empty sample set");
  }
  if (z.size() != z_star.size() || z.size() != x_star.size()) {
    throw std::invalid_argument("check_projection_vi: size mismatch");
  }
  if (!mirror_consistent(kernel, PrimalDualPair{z, z_star}, 1e-8)) {
    throw std::invalid_argument(
        "check_projection_vi: z is not the mirror image of z_star");
  }
  const Vec normal = subtract(z_star, x_star);
  const double normal_norm = norm2(normal);
  for (const Vec& y : samples) {
    if (y.size() != z.size()) {
      throw std::invalid_argument("check_projection_vi: sample size mismatch");
    }
    const Vec gap = subtract(y, z);
    const double lhs = dot(normal, gap);
    const double scale = std::max(1.0, normal_norm * norm2(gap));
    if (lhs < -residual_tol * scale) return false;
  }
  return true;
}

}  // namespace bregcut
