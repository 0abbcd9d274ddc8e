#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bregcut/core.hpp"
#include "bregcut/harness.hpp"
#include "bregcut/kernels.hpp"
#include "bregcut/objectives.hpp"
#include "bregcut/solver.hpp"
#include "test_util.hpp"

using namespace bregcut;
namespace tu = bregcut::testutil;

namespace {

InnerObjective scalar_objective(double b) {
  return InnerObjective::least_squares(DenseMatrix(1, 1, {1.0}), {b});
}

}  // namespace

TEST_CASE("single step, frozen 1d examples") {
  // f = x^2/2, quadratic kernel, constant t = 1: one step from x = 1 lands
  // exactly at the minimizer.
  const InnerObjective obj = scalar_objective(0.0);
  const auto [quad_next, t_quad] =
      step(Kernel::quadratic(), obj, {{1.0}, {1.0}}, StepSizeRule::constant(1.0));
  CHECK(t_quad == 1.0);
  CHECK(quad_next.x == Vec{0.0});
  CHECK(quad_next.x_star == Vec{0.0});

  // Elastic net lambda = 1, dual 3 (primal 2): gradient 2, so t = 1 moves the
  // dual to 1, inside the shrinkage band, and the primal snaps to 0.
  const auto [en_next, t_en] = step(Kernel::elastic_net(1.0), obj,
                                    {{2.0}, {3.0}}, StepSizeRule::constant(1.0));
  CHECK(t_en == 1.0);
  CHECK(en_next.x_star == Vec{1.0});
  CHECK(en_next.x == Vec{0.0});

  // Same start under the exact rule: the dual minimizer sits at the cap
  // mu / L, which differs from 1 only by the cached Lipschitz inflation.
  const auto [ex_next, t_ex] = step(Kernel::elastic_net(1.0), obj,
                                    {{2.0}, {3.0}}, StepSizeRule::exact());
  CHECK(t_ex == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(ex_next.x[0] == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));

  // Dynamic rule: ||r||^2 / ||A^T r||^2 = 1 for the identity map.
  const auto [dy_next, t_dy] = step(Kernel::quadratic(), obj, {{1.0}, {1.0}},
                                    StepSizeRule::dynamic());
  CHECK(t_dy == 1.0);
  CHECK(dy_next.x == Vec{0.0});
}

TEST_CASE("step rejects optimal iterates") {
  const InnerObjective obj = scalar_objective(1.0);
  CHECK_THROWS_AS(
      step(Kernel::quadratic(), obj, {{1.0}, {1.0}}, StepSizeRule::exact()),
      std::domain_error);
}

TEST_CASE("1d consistent recovery under the elastic net") {
  // Minimize 0.5 |x| + x^2/2 over {x : x = 1}; the feasible set is a single
  // point, so every rule must land on x = 1.
  const InnerObjective obj = scalar_objective(1.0);
  const Kernel en = Kernel::elastic_net(0.5);
  for (const StepSizeRule& rule :
       {StepSizeRule::exact(), StepSizeRule::constant(0.9),
        StepSizeRule::dynamic()}) {
    SolverConfig config;
    config.rule = rule;
    config.max_iters = 20000;
    const SolveResult res = solve(en, obj, config);
    CHECK(res.converged);
    CHECK(res.x_final[0] == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("quadratic kernel with a constant step is plain gradient descent") {
  CounterRng rng(0x90d5);
  const std::size_t m = 6;
  const std::size_t n = 9;
  const DenseMatrix a = tu::random_matrix(rng, m, n);
  const Vec b = tu::random_vec(rng, m, -2.0, 2.0);
  const InnerObjective obj = InnerObjective::least_squares(a, b);
  const double t = 0.8 / obj.lipschitz();

  SolverConfig config;
  config.rule = StepSizeRule::constant(t);
  config.max_iters = 1000;
  config.tolerances.grad_tol = 1e-300;
  config.record_trace = false;
  const SolveResult res = solve(Kernel::quadratic(), obj, config);
  CHECK(res.iterations_used == 1000);

  Vec x = zeros(n);
  for (int k = 0; k < 1000; ++k) {
    x = add_scaled(x, -t, a.apply_transpose(obj.residual(x)));
  }
  REQUIRE(res.x_final.size() == x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::abs(res.x_final[i] - x[i]) <= 1e-14 * (1.0 + std::abs(x[i])));
  }
}

TEST_CASE("per-step distance decrease toward any feasible point") {
  // For a cut at x_k and any u in the halfspace, one step with t = mu/L (or
  // the exact rule, which does at least as well) contracts D(u, .) by
  // mu / (2 L^2) * ||g_k||^2; a general constant t in (0, 2 mu/L) contracts
  // by (t/L - t^2/(2 mu)) * ||g_k||^2. A consistent instance keeps x_true
  // inside every cut.
  CounterRng rng(0xde5c);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t m = 3 + rng.uniform_index(4);
    const std::size_t n = m + 2;
    const ProblemInstance inst = generate_instance(
        m, n, 1 + rng.uniform_index(2), NoiseKind::kNone, 1.0, 900 + rep);
    const InnerObjective obj = InnerObjective::least_squares(inst.a, inst.b_obs);
    const Kernel k = rep % 2 == 0 ? Kernel::elastic_net(inst.lambda)
                                  : Kernel::quadratic();
    const double lip = obj.lipschitz();
    const double cap = k.mu() / lip;
    const double t_const = (0.1 + 1.7 * rng.uniform01()) * cap;

    for (const StepSizeRule& rule :
         {StepSizeRule::exact(), StepSizeRule::constant(t_const)}) {
      PrimalDualPair pair = make_pair_from_dual(k, zeros(n));
      for (int it = 0; it < 20; ++it) {
        const Vec g = obj.gradient(pair.x);
        if (norm2(g) == 0.0) break;
        const double before = bregman_distance(k, inst.x_true, pair.x_star);
        const auto [next, t] = step(k, obj, pair, rule);
        const double after = bregman_distance(k, inst.x_true, next.x_star);
        const double gain = rule.kind == StepSizeRule::Kind::kExact
                                ? k.mu() / (2.0 * lip * lip)
                                : t / lip - t * t / (2.0 * k.mu());
        CHECK(after <= before - gain * dot(g, g) +
                           1e-10 * std::max(1.0, before));
        pair = next;
      }
    }
  }
}

TEST_CASE("inner objective value is monotone for exact and capped constant steps") {
  const ProblemInstance inst =
      generate_instance(8, 16, 3, NoiseKind::kNone, 1.0, 77);
  const InnerObjective obj = InnerObjective::least_squares(inst.a, inst.b_obs);
  const Kernel k = Kernel::elastic_net(inst.lambda);
  for (const StepSizeRule& rule :
       {StepSizeRule::exact(),
        StepSizeRule::constant(k.mu() / obj.lipschitz())}) {
    SolverConfig config;
    config.rule = rule;
    config.max_iters = 400;
    config.tolerances.grad_tol = 1e-300;
    const SolveResult res = solve(k, obj, config);
    for (std::size_t i = 0; i + 1 < res.trace.size(); ++i) {
      CHECK(res.trace[i + 1].f_val <=
            res.trace[i].f_val + 1e-12 * (1.0 + res.trace[i].f_val));
    }
  }
}

TEST_CASE("sublinear inner objective bound from a zero start") {
  // With x_0 = 0 the Bregman distance to any feasible x equals omega(x), and
  // the constant rule t = mu/L obeys f(x_{T+1}) <= omega(x_true) / ((T+1) t).
  const ProblemInstance inst =
      generate_instance(8, 16, 3, NoiseKind::kNone, 1.0, 78);
  const InnerObjective obj = InnerObjective::least_squares(inst.a, inst.b_obs);
  const Kernel k = Kernel::elastic_net(inst.lambda);
  const double t = k.mu() / obj.lipschitz();

  SolverConfig config;
  config.rule = StepSizeRule::constant(t);
  config.max_iters = 300;
  config.tolerances.grad_tol = 1e-300;
  const SolveResult res = solve(k, obj, config);
  REQUIRE(res.trace.size() == 301);
  const double budget = k.value(inst.x_true);
  for (std::size_t big_t = 0; big_t + 1 < res.trace.size(); ++big_t) {
    CHECK(res.trace[big_t + 1].f_val <=
          budget / (static_cast<double>(big_t + 1) * t) + 1e-10);
  }
}

TEST_CASE("dual iterates stay in the row space of the design") {
  const ProblemInstance inst =
      generate_instance(6, 12, 2, NoiseKind::kNone, 1.0, 79);
  const InnerObjective obj = InnerObjective::least_squares(inst.a, inst.b_obs);
  for (const StepSizeRule& rule :
       {StepSizeRule::exact(), StepSizeRule::constant(0.5 / obj.lipschitz()),
        StepSizeRule::dynamic()}) {
    for (const Kernel& k :
         {Kernel::elastic_net(inst.lambda), Kernel::quadratic()}) {
      SolverConfig config;
      config.rule = rule;
      config.max_iters = 50;
      config.tolerances.grad_tol = 1e-300;
      config.record_trace = false;
      const SolveResult res = solve(k, obj, config);
      // Every dual move is -t A^T r, so the accumulated dual lies in R(A^T).
      const double rr = tu::range_residual(inst.a, res.x_star_final);
      CHECK(rr <= 1e-7 * std::max(1.0, norm2(res.x_star_final)));
      CHECK(mirror_consistent(k, {res.x_final, res.x_star_final}));
    }
  }
}

TEST_CASE("trace layout and terminal row") {
  const ProblemInstance inst =
      generate_instance(5, 10, 2, NoiseKind::kNone, 1.0, 80);
  const InnerObjective obj = InnerObjective::least_squares(inst.a, inst.b_obs);
  const Kernel k = Kernel::elastic_net(inst.lambda);

  SolverConfig config;
  config.rule = StepSizeRule::exact();
  config.max_iters = 25;
  config.tolerances.grad_tol = 1e-300;
  config.reference = inst.x_true;
  config.feasible_point = inst.x_true;
  const SolveResult res = solve(k, obj, config);

  CHECK_FALSE(res.converged);
  CHECK(res.iterations_used == 25);
  REQUIRE(res.trace.size() == 26);
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    const IterationRecord& rec = res.trace[i];
    CHECK(rec.k == i);
    if (i + 1 < res.trace.size()) {
      CHECK(rec.t_k > 0.0);
    } else {
      CHECK(rec.t_k == 0.0);
    }
    CHECK(rec.feas == doctest::Approx(rec.grad_norm == 0.0 ? 0.0 : rec.feas));
    CHECK(rec.recon_err.has_value());
    CHECK(rec.bregman_to_feasible.has_value());
    CHECK(rec.f_val == doctest::Approx(0.5 * rec.feas * rec.feas));
  }
  // Without the optional inputs the columns stay empty, and trace recording
  // can be turned off entirely.
  SolverConfig bare;
  bare.rule = StepSizeRule::exact();
  bare.max_iters = 3;
  bare.tolerances.grad_tol = 1e-300;
  const SolveResult res2 = solve(k, obj, bare);
  CHECK_FALSE(res2.trace[0].recon_err.has_value());
  CHECK_FALSE(res2.trace[0].bregman_to_feasible.has_value());
  bare.record_trace = false;
  CHECK(solve(k, obj, bare).trace.empty());
}

TEST_CASE("solve stops immediately at an optimal start") {
  const InnerObjective obj = InnerObjective::least_squares(
      DenseMatrix(2, 2, {1.0, 0.0, 0.0, 1.0}), {1.0, 2.0});
  SolverConfig config;
  const SolveResult res =
      solve(Kernel::quadratic(), obj, config, {1.0, 2.0}, Vec{1.0, 2.0});
  CHECK(res.converged);
  CHECK(res.iterations_used == 0);
  REQUIRE(res.trace.size() == 1);
  CHECK(res.trace[0].t_k == 0.0);
  CHECK(res.trace[0].grad_norm == 0.0);
}

TEST_CASE("configuration validation") {
  const InnerObjective obj = scalar_objective(1.0);
  const Kernel quad = Kernel::quadratic();
  const double limit = 2.0 * quad.mu() / obj.lipschitz();

  SolverConfig config;
  config.rule = StepSizeRule::constant(limit);
  CHECK_THROWS_AS(solve(quad, obj, config), std::invalid_argument);
  config.rule = StepSizeRule::constant(0.0);
  CHECK_THROWS_AS(solve(quad, obj, config), std::invalid_argument);
  config.rule = StepSizeRule::constant(-0.5);
  CHECK_THROWS_AS(solve(quad, obj, config), std::invalid_argument);
  config.rule = StepSizeRule::constant(
      std::numeric_limits<double>::quiet_NaN());
  CHECK_THROWS_AS(solve(quad, obj, config), std::invalid_argument);
  config.rule = StepSizeRule::constant(0.999 * limit);
  CHECK_NOTHROW(solve(quad, obj, config));

  config.rule = StepSizeRule::exact();
  config.max_iters = 0;
  CHECK_THROWS_AS(solve(quad, obj, config), std::invalid_argument);
  config.max_iters = 10;

  config.tolerances.grad_tol = 0.0;
  CHECK_THROWS_AS(solve(quad, obj, config), std::invalid_argument);
  config.tolerances.grad_tol = 1e-9;

  config.reference = Vec{1.0, 2.0};
  CHECK_THROWS_AS(solve(quad, obj, config), std::invalid_argument);
  config.reference.reset();
  config.feasible_point = Vec{1.0, 2.0};
  CHECK_THROWS_AS(solve(quad, obj, config), std::invalid_argument);
  config.feasible_point.reset();

  CHECK_THROWS_AS(solve(quad, obj, config, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(solve(quad, obj, config, {2.0}, Vec{5.0}),
                  std::invalid_argument);
  // A dual inside the shrinkage band is a legitimate subgradient at 0.
  const Kernel en = Kernel::elastic_net(1.0);
  CHECK_NOTHROW(solve(en, obj, config, {0.0}, Vec{0.5}));
}

TEST_CASE("default stopping tolerance scales with the data") {
  const InnerObjective obj = InnerObjective::least_squares(
      DenseMatrix(2, 2, {1.0, 0.0, 0.0, 1.0}), {3.0, 4.0});
  CHECK(default_grad_tol(obj) == doctest::Approx(6e-9));
}

TEST_CASE("midsize consistent instance reaches feasibility") {
  const ProblemInstance inst =
      generate_instance(20, 40, 5, NoiseKind::kNone, 1.0, 81);
  const InnerObjective obj = InnerObjective::least_squares(inst.a, inst.b_obs);
  const Kernel k = Kernel::elastic_net(inst.lambda);
  SolverConfig config;
  config.rule = StepSizeRule::exact();
  config.max_iters = 50000;
  config.tolerances.grad_tol = 1e-10;
  const SolveResult res = solve(k, obj, config);
  CHECK(res.converged);
  CHECK(obj.feasibility(res.x_final) <= 1e-6);
}
