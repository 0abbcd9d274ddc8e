#include "bregcut/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "bregcut/cuts.hpp"

namespace bregcut {

double default_grad_tol(const InnerObjective& obj) {
  const Vec origin = zeros(obj.matrix().cols());
  return 1e-9 * (1.0 + norm2(obj.gradient(origin)));
}

namespace {

double choose_step(const Kernel& kernel, const InnerObjective& obj,
                   const PrimalDualPair& pair, const Vec& g, const Vec& r,
                   const StepSizeRule& rule, const Tolerances& tolerances) {
  switch (rule.kind) {
    case StepSizeRule::Kind::kExact: {
      const Halfspace h = halfspace_from_gradient(g, pair.x, obj.lipschitz());
      return exact_step(kernel, pair.x_star, h.a, h.beta, kernel.mu(),
                        obj.lipschitz(), tolerances.bisection_tol);
    }
    case StepSizeRule::Kind::kConstant:
      return rule.t;
    case StepSizeRule::Kind::kDynamic: {
      const double num = dot(r, r);
      const double den = dot(g, g);
      if (num == 0.0 || den == 0.0) {
        throw std::domain_error("step: zero residual, iterate is optimal");
      }
      return num / den;
    }
  }
  throw std::logic_error("step: unknown rule kind");
}

void validate_config(const Kernel& kernel, const InnerObjective& obj,
                     const SolverConfig& config) {
  validate(config.tolerances);
  if (config.max_iters == 0) {
    throw std::invalid_argument("solve: max_iters must be at least 1");
  }
  if (config.rule.kind == StepSizeRule::Kind::kConstant) {
    const double limit = 2.0 * kernel.mu() / obj.lipschitz();
    if (!(config.rule.t > 0.0) || !(config.rule.t < limit) ||
        !std::isfinite(config.rule.t)) {
      throw std::invalid_argument(
          "solve: constant step must lie in (0, 2 mu / L)");
    }
  }
  const std::size_t n = obj.matrix().cols();
  if (config.reference && config.reference->size() != n) {
    throw std::invalid_argument("solve: reference size mismatch");
  }
  if (config.feasible_point && config.feasible_point->size() != n) {
    throw std::invalid_argument("solve: feasible_point size mismatch");
  }
}

}  // namespace

std::pair<PrimalDualPair, double> step(const Kernel& kernel,
                                       const InnerObjective& obj,
                                       const PrimalDualPair& pair,
                                       const StepSizeRule& rule,
                                       const Tolerances& tolerances) {
  validate(tolerances);
  const Vec r = obj.residual(pair.x);
  const Vec g = obj.matrix().apply_transpose(r);
  if (dot(g, g) == 0.0) {
    throw std::domain_error("step: zero gradient, iterate is optimal");
  }
  const double t = choose_step(kernel, obj, pair, g, r, rule, tolerances);
  PrimalDualPair next;
  next.x_star = add_scaled(pair.x_star, -t, g);
  next.x = kernel.mirror_map(next.x_star);
  return {std::move(next), t};
}

SolveResult solve(const Kernel& kernel, const InnerObjective& obj,
                  const SolverConfig& config, const Vec& x0,
                  const std::optional<Vec>& x0_star) {
  validate_config(kernel, obj, config);
  const std::size_t n = obj.matrix().cols();
  if (x0.size() != n) {
    throw std::invalid_argument("solve: x0 size mismatch");
  }

  PrimalDualPair pair;
  pair.x_star = x0_star ? *x0_star : kernel.initial_subgradient(x0);
  pair.x = kernel.mirror_map(pair.x_star);
  if (x0_star) {
    const double err = norm2(subtract(pair.x, x0));
    const double scale = std::max({1.0, norm2(pair.x), norm2(x0)});
    if (err > 1e-12 * scale) {
      throw std::invalid_argument("solve: x0_star is not a subgradient at x0");
    }
  }

  SolveResult result;
  for (std::size_t k = 0;; ++k) {
    const Vec r = obj.residual(pair.x);
    const Vec g = obj.matrix().apply_transpose(r);
    const double grad_norm = norm2(g);

    IterationRecord rec;
    if (config.record_trace) {
      rec.k = k;
      rec.grad_norm = grad_norm;
      rec.f_val = 0.5 * dot(r, r);
      rec.omega_val = kernel.value(pair.x);
      rec.feas = norm2(r);
      if (config.reference) {
        rec.recon_err = norm2(subtract(pair.x, *config.reference));
      }
      if (config.feasible_point) {
        rec.bregman_to_feasible =
            bregman_distance(kernel, *config.feasible_point, pair.x_star);
      }
    }

    const bool stopped = grad_norm <= config.tolerances.grad_tol;
    if (stopped || k == config.max_iters) {
      if (config.record_trace) result.trace.push_back(rec);
      result.converged = stopped;
      result.iterations_used = k;
      break;
    }

    const double t = choose_step(kernel, obj, pair, g, r, config.rule,
                                 config.tolerances);
    if (config.record_trace) {
      rec.t_k = t;
      result.trace.push_back(rec);
    }

    pair.x_star = add_scaled(pair.x_star, -t, g);
    pair.x = kernel.mirror_map(pair.x_star);
  }

  result.x_final = std::move(pair.x);
  result.x_star_final = std::move(pair.x_star);
  return result;
}

SolveResult solve(const Kernel& kernel, const InnerObjective& obj,
                  const SolverConfig& config) {
  const Vec x0 = zeros(obj.matrix().cols());
  return solve(kernel, obj, config, x0);
}

}  // namespace bregcut
