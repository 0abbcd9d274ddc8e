#include "bregcut/baseline.hpp"

#include <cmath>
#include <stdexcept>

namespace bregcut {

FdpgResult fdpg_solve(const DenseMatrix& a, const ConvexSetQ& q,
                      const Kernel& kernel, const FdpgConfig& config) {
  if (q.center().size() != a.rows()) {
    throw std::invalid_argument("fdpg_solve: target dimension mismatch");
  }
  if (config.max_iters == 0) {
    throw std::invalid_argument("fdpg_solve: max_iters must be at least 1");
  }
  if (config.tol <= 0.0 || !std::isfinite(config.tol)) {
    throw std::invalid_argument("fdpg_solve: tol must be positive");
  }
  if (config.step_l && (*config.step_l <= 0.0 || !std::isfinite(*config.step_l))) {
    throw std::invalid_argument("fdpg_solve: step_l must be positive");
  }

  const double big_l = config.step_l
                           ? *config.step_l
                           : spectral_norm_sq(a) * (1.0 + 1e-9) / kernel.mu();
  const std::size_t m = a.rows();

  Vec w = zeros(m);
  Vec y = zeros(m);
  double t = 1.0;

  FdpgResult result;
  for (std::size_t k = 0; k < config.max_iters; ++k) {
    result.x = kernel.mirror_map(a.apply_transpose(w));
    const Vec au = a.apply(result.x);
    // prox of the indicator of Q with any scaling is the projection
    const Vec proxed = project_q(q, add_scaled(au, -big_l, w));
    Vec y_next(m);
    for (std::size_t i = 0; i < m; ++i) {
      y_next[i] = w[i] - (au[i] - proxed[i]) / big_l;
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double momentum = (t - 1.0) / t_next;
    const double displacement = norm2(subtract(y_next, y));
    for (std::size_t i = 0; i < m; ++i) {
      w[i] = y_next[i] + momentum * (y_next[i] - y[i]);
    }
    y = std::move(y_next);
    t = t_next;
    result.iterations_used = k + 1;
    if (displacement <= config.tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace bregcut
