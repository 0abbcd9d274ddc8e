#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bregcut/core.hpp"
#include "bregcut/kernels.hpp"
#include "bregcut/objectives.hpp"
#include "bregcut/stepsize.hpp"

namespace bregcut {

struct SolverConfig {
  StepSizeRule rule = StepSizeRule::exact();
  std::size_t max_iters = 1000;
  Tolerances tolerances;
  bool record_trace = true;
  /// Reference signal for the recon_err trace column.
  std::optional<Vec> reference;
  /// A known point of the solution set; enables the bregman_to_feasible
  /// trace column D(feasible_point, x_k).
  std::optional<Vec> feasible_point;
};

/// One row of the per-iteration trace. Row k describes the iterate x_k
/// before the k-th step; t_k is the step that produced x_{k+1} (0 on the
/// terminal row, where no step was taken).
struct IterationRecord {
  std::size_t k = 0;
  double t_k = 0.0;
  double grad_norm = 0.0;
  double f_val = 0.0;
  double omega_val = 0.0;
  double feas = 0.0;
  std::optional<double> recon_err;
  std::optional<double> bregman_to_feasible;
};

struct SolveResult {
  Vec x_final;
  Vec x_star_final;
  std::size_t iterations_used = 0;
  bool converged = false;
  std::vector<IterationRecord> trace;
};

/// Data-scaled default stopping threshold 1e-9 * (1 + ||grad f(0)||).
double default_grad_tol(const InnerObjective& obj);

/// One cut-and-project update from a mirror-consistent pair:
///
///   x_star_next = x_star - t * grad f(x),
///   x_next      = mirror_map(x_star_next),
///
/// with t chosen by the rule. No range validation is applied to constant
/// steps here; solve() enforces the convergent range. Throws on a zero
/// gradient (the iterate already minimizes f).
std::pair<PrimalDualPair, double> step(const Kernel& kernel,
                                       const InnerObjective& obj,
                                       const PrimalDualPair& pair,
                                       const StepSizeRule& rule,
                                       const Tolerances& tolerances = {});

/// Runs the solver from x0 until ||grad f(x_k)|| <= grad_tol or max_iters
/// steps. When x0_star is omitted it is taken as initial_subgradient(x0);
/// when given, it must be a subgradient consistent with x0 (mirror_map maps
/// it back to x0). Constant rules are validated against (0, 2 mu/L).
SolveResult solve(const Kernel& kernel, const InnerObjective& obj,
                  const SolverConfig& config, const Vec& x0,
                  const std::optional<Vec>& x0_star = std::nullopt);

/// Convenience overload starting from x0 = x0_star = 0.
SolveResult solve(const Kernel& kernel, const InnerObjective& obj,
                  const SolverConfig& config);

}  // namespace bregcut
