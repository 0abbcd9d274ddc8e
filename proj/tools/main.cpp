// Command-line front end: generate instances, run the cut-and-project
// solver, produce reference optima, run oracle check suites, and emit
// plot-ready CSV traces.
//
// Exit codes: 0 success, 1 property failure, 2 usage, 3 I/O,
// 4 non-convergence.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bregcut/baseline.hpp"
#include "bregcut/core.hpp"
#include "bregcut/cuts.hpp"
#include "bregcut/harness.hpp"
#include "bregcut/kernels.hpp"
#include "bregcut/objectives.hpp"
#include "bregcut/rng.hpp"
#include "bregcut/solver.hpp"
#include "bregcut/stepsize.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoConvergence = 4;

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

bregcut::Kernel make_kernel(const std::string& name, double lambda) {
  if (name == "quadratic") return bregcut::Kernel::quadratic();
  if (name == "elasticnet") return bregcut::Kernel::elastic_net(lambda);
  throw std::invalid_argument("unknown kernel: " + name);
}

bregcut::ConvexSetQ make_constraint(const std::string& name,
                                    const bregcut::ProblemInstance& inst,
                                    std::optional<double> radius) {
  if (name == "point") return bregcut::ConvexSetQ::point(inst.b_obs);
  const double r = radius.value_or(inst.sigma);
  if (name == "l2ball") return bregcut::ConvexSetQ::l2_ball(inst.b_obs, r);
  if (name == "linfbox") return bregcut::ConvexSetQ::linf_box(inst.b_obs, r);
  throw std::invalid_argument("unknown constraint: " + name);
}

bregcut::InnerObjective make_objective(const std::string& constraint,
                                       const bregcut::ProblemInstance& inst,
                                       const bregcut::ConvexSetQ& q) {
  if (constraint == "point") {
    return bregcut::InnerObjective::least_squares(inst.a, inst.b_obs);
  }
  return bregcut::InnerObjective::dist_sq(inst.a, q);
}

bregcut::StepSizeRule make_rule(const std::string& name,
                                std::optional<double> t, double mu,
                                double lipschitz) {
  if (name == "exact") return bregcut::StepSizeRule::exact();
  if (name == "dynamic") return bregcut::StepSizeRule::dynamic();
  if (name == "constant") {
    return bregcut::StepSizeRule::constant(t.value_or(mu / lipschitz));
  }
  throw std::invalid_argument("unknown step rule: " + name);
}

struct SolveFlags {
  std::string problem;
  std::string kernel = "elasticnet";
  std::string stepsize = "exact";
  std::optional<double> t;
  std::optional<double> lambda;
  std::string constraint = "point";
  std::optional<double> radius;
  std::size_t max_iters = 20000;
  double tol = 1e-9;
  std::string trace;
};

int run_solve(const SolveFlags& flags) {
  const bregcut::ProblemInstance inst = bregcut::load_problem(flags.problem);
  const bregcut::Kernel kernel =
      make_kernel(flags.kernel, flags.lambda.value_or(inst.lambda));
  const bregcut::ConvexSetQ q =
      make_constraint(flags.constraint, inst, flags.radius);
  const bregcut::InnerObjective obj = make_objective(flags.constraint, inst, q);

  bregcut::SolverConfig config;
  config.rule =
      make_rule(flags.stepsize, flags.t, kernel.mu(), obj.lipschitz());
  config.max_iters = flags.max_iters;
  config.tolerances.grad_tol = flags.tol;
  config.record_trace = true;
  config.reference = inst.x_true;
  if (inst.noise == bregcut::NoiseKind::kNone && flags.constraint == "point") {
    config.feasible_point = inst.x_true;
  }

  const bregcut::SolveResult result = bregcut::solve(kernel, obj, config);
  if (!flags.trace.empty()) bregcut::write_trace_csv(result.trace, flags.trace);

  const bregcut::Metrics m = bregcut::metrics(inst, result.x_final, q);
  std::cout << "converged=" << (result.converged ? 1 : 0)
            << " iterations=" << result.iterations_used
            << " feas=" << fmt(m.feas) << " omega_val=" << fmt(m.omega_val)
            << " recon_err=" << fmt(m.recon_err) << "\n";
  return result.converged ? kExitOk : kExitNoConvergence;
}

struct ReferenceFlags {
  std::string problem;
  std::string kernel = "elasticnet";
  std::optional<double> lambda;
  std::string constraint = "point";
  std::optional<double> radius;
  std::size_t max_iters = 200000;
  double tol = 1e-10;
  std::string out;
};

int run_reference(const ReferenceFlags& flags) {
  const bregcut::ProblemInstance inst = bregcut::load_problem(flags.problem);
  const bregcut::Kernel kernel =
      make_kernel(flags.kernel, flags.lambda.value_or(inst.lambda));
  const bregcut::ConvexSetQ q =
      make_constraint(flags.constraint, inst, flags.radius);

  bregcut::FdpgConfig config;
  config.max_iters = flags.max_iters;
  config.tol = flags.tol;
  const bregcut::FdpgResult result = bregcut::fdpg_solve(inst.a, q, kernel, config);

  const bregcut::Metrics m = bregcut::metrics(inst, result.x, q);
  nlohmann::ordered_json j;
  j["omega_val"] = m.omega_val;
  j["x_ref"] = result.x;
  std::ofstream out(flags.out, std::ios::binary);
  if (!out) throw bregcut::IoError("cannot open for writing: " + flags.out);
  out << j.dump(2) << '\n';
  if (!out) throw bregcut::IoError("write failed: " + flags.out);

  std::cout << "converged=" << (result.converged ? 1 : 0)
            << " iterations=" << result.iterations_used
            << " feas=" << fmt(m.feas) << " omega_val=" << fmt(m.omega_val)
            << "\n";
  return result.converged ? kExitOk : kExitNoConvergence;
}

struct CompareFlags {
  std::string problem;
  std::string kernel = "elasticnet";
  std::optional<double> lambda;
  std::string constraint = "point";
  std::optional<double> radius;
  std::vector<std::string> rules;
  std::optional<double> t;
  std::size_t max_iters = 20000;
  double tol = 1e-9;
  std::string out_dir;
};

int run_compare(const CompareFlags& flags) {
  const bregcut::ProblemInstance inst = bregcut::load_problem(flags.problem);
  const bregcut::Kernel kernel =
      make_kernel(flags.kernel, flags.lambda.value_or(inst.lambda));
  const bregcut::ConvexSetQ q =
      make_constraint(flags.constraint, inst, flags.radius);
  const bregcut::InnerObjective obj = make_objective(flags.constraint, inst, q);

  for (const std::string& rule : flags.rules) {
    // Validate every rule before any file is written.
    make_rule(rule, flags.t, kernel.mu(), obj.lipschitz());
  }

  std::error_code ec;
  std::filesystem::create_directories(flags.out_dir, ec);
  if (ec) throw bregcut::IoError("cannot create directory: " + flags.out_dir);

  std::string summary = "rule,converged,iterations,final_feas,final_omega,"
                        "final_recon_err,feas_slope,feas_r2\n";
  bool all_converged = true;
  for (const std::string& rule : flags.rules) {
    bregcut::SolverConfig config;
    config.rule = make_rule(rule, flags.t, kernel.mu(), obj.lipschitz());
    config.max_iters = flags.max_iters;
    config.tolerances.grad_tol = flags.tol;
    config.record_trace = true;
    config.reference = inst.x_true;

    const bregcut::SolveResult result = bregcut::solve(kernel, obj, config);
    all_converged = all_converged && result.converged;
    const std::string trace_path =
        (std::filesystem::path(flags.out_dir) / ("trace_" + rule + ".csv"))
            .string();
    bregcut::write_trace_csv(result.trace, trace_path);

    const bregcut::Metrics m = bregcut::metrics(inst, result.x_final, q);
    summary += rule;
    summary += ',';
    summary += result.converged ? '1' : '0';
    summary += ',';
    summary += std::to_string(result.iterations_used);
    summary += ',' + fmt(m.feas) + ',' + fmt(m.omega_val) + ',' +
               fmt(m.recon_err) + ',';
    const std::size_t last = result.trace.back().k;
    try {
      const bregcut::RateFit fit = bregcut::fit_linear_rate(
          result.trace, "feas", std::min<std::size_t>(10, last / 2), last);
      summary += fmt(fit.slope) + ',' + fmt(fit.r_squared);
    } catch (const std::exception&) {
      summary += ',';  // rate undefined (zeros in window or window too small)
    }
    summary += '\n';
    std::cout << "rule=" << rule << " converged=" << (result.converged ? 1 : 0)
              << " iterations=" << result.iterations_used
              << " feas=" << fmt(m.feas) << " recon_err=" << fmt(m.recon_err)
              << "\n";
  }

  const std::string summary_path =
      (std::filesystem::path(flags.out_dir) / "summary.csv").string();
  std::ofstream out(summary_path, std::ios::binary);
  if (!out) throw bregcut::IoError("cannot open for writing: " + summary_path);
  out << summary;
  if (!out) throw bregcut::IoError("write failed: " + summary_path);
  return all_converged ? kExitOk : kExitNoConvergence;
}

bregcut::Kernel random_kernel(bregcut::CounterRng& rng) {
  if (rng.uniform01() < 0.25) return bregcut::Kernel::quadratic();
  return bregcut::Kernel::elastic_net(rng.uniform(0.1, 2.0));
}

bregcut::Vec random_vec(bregcut::CounterRng& rng, std::size_t n, double lo,
                        double hi) {
  bregcut::Vec v(n);
  for (double& e : v) e = rng.uniform(lo, hi);
  return v;
}

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

SuiteResult suite_three_point(std::uint64_t seed, std::size_t cases) {
  bregcut::CounterRng rng(seed ^ 0x7033u);
  SuiteResult out{"three_point", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t n = 1 + rng.uniform_index(6);
    const bregcut::Kernel kernel = random_kernel(rng);
    const bregcut::Vec u = random_vec(rng, n, -3.0, 3.0);
    const bregcut::Vec p_star = random_vec(rng, n, -3.0, 3.0);
    const bregcut::Vec q_star = random_vec(rng, n, -3.0, 3.0);
    const double res = bregcut::three_point_residual(kernel, u, p_star, q_star);
    const double scale =
        1.0 + std::abs(bregcut::bregman_distance(kernel, u, p_star)) +
        std::abs(bregcut::bregman_distance(kernel, u, q_star));
    if (std::abs(res) > 1e-8 * scale) ++out.failures;
  }
  return out;
}

// Shared fixture for the cut-based suites: a random dual point plus the
// halfspace cut through the gradient of a random least-squares objective.
struct CutCase {
  bregcut::Kernel kernel = bregcut::Kernel::quadratic();
  bregcut::Vec x_star;
  bregcut::Halfspace h;
  double lipschitz = 0.0;
  bool degenerate = false;
};

CutCase random_cut_case(bregcut::CounterRng& rng) {
  CutCase c;
  const std::size_t m = 2 + rng.uniform_index(4);
  const std::size_t n = 2 + rng.uniform_index(4);
  bregcut::Vec entries(m * n);
  for (double& e : entries) e = rng.normal();
  const bregcut::DenseMatrix a(m, n, std::move(entries));
  const bregcut::Vec b = random_vec(rng, m, -2.0, 2.0);
  c.kernel = random_kernel(rng);
  c.x_star = random_vec(rng, n, -2.0, 2.0);
  const bregcut::InnerObjective obj = bregcut::InnerObjective::least_squares(a, b);
  const bregcut::Vec x = c.kernel.mirror_map(c.x_star);
  const std::optional<bregcut::Halfspace> h = bregcut::build_halfspace(obj, x);
  if (!h) {
    c.degenerate = true;
    return c;
  }
  c.h = *h;
  c.lipschitz = obj.lipschitz();
  return c;
}

SuiteResult suite_projection_vi(std::uint64_t seed, std::size_t cases,
                                bool inject_bug) {
  bregcut::CounterRng rng(seed ^ 0xb1u);
  SuiteResult out{"projection_vi", cases, 0};
  const double bug = inject_bug ? 1.05 : 1.0;
  for (std::size_t i = 0; i < cases; ++i) {
    const CutCase c = random_cut_case(rng);
    if (c.degenerate) continue;
    const double t = bug * bregcut::exact_step(c.kernel, c.x_star, c.h.a,
                                               c.h.beta, c.kernel.mu(),
                                               c.lipschitz);
    const bregcut::Vec z_star = bregcut::add_scaled(c.x_star, -t, c.h.a);
    const bregcut::Vec z = c.kernel.mirror_map(z_star);

    const double a2 = bregcut::dot(c.h.a, c.h.a);
    std::vector<bregcut::Vec> samples;
    for (std::size_t s = 0; s < 20; ++s) {
      bregcut::Vec y = random_vec(rng, c.x_star.size(), -3.0, 3.0);
      const double v = bregcut::dot(c.h.a, y) - c.h.beta;
      if (v > 0.0) y = bregcut::add_scaled(y, -v / a2, c.h.a);
      samples.push_back(std::move(y));
    }
    if (!bregcut::check_projection_vi(c.kernel, c.x_star, z, z_star, samples)) {
      ++out.failures;
    }
  }
  return out;
}

SuiteResult suite_dual_step_range(std::uint64_t seed, std::size_t cases,
                                  bool inject_bug) {
  bregcut::CounterRng rng(seed ^ 0xd5u);
  SuiteResult out{"dual_step_range", cases, 0};
  const double bug = inject_bug ? 1.05 : 1.0;
  for (std::size_t i = 0; i < cases; ++i) {
    const CutCase c = random_cut_case(rng);
    if (c.degenerate) continue;
    const double mu = c.kernel.mu();
    const double t_cap = mu / c.lipschitz;
    const double t = bug * bregcut::exact_step(c.kernel, c.x_star, c.h.a,
                                               c.h.beta, mu, c.lipschitz);
    if (!(t > 0.0 && t <= t_cap * (1.0 + 1e-12))) {
      ++out.failures;
      continue;
    }
    const bool interior =
        bregcut::dual_derivative(c.kernel, c.x_star, c.h.a, c.h.beta, t_cap) >
        0.0;
    if (!interior) continue;
    const bregcut::Vec z =
        c.kernel.mirror_map(bregcut::add_scaled(c.x_star, -t, c.h.a));
    if (bregcut::hyperplane_residual(c.h, z) > 1e-8) ++out.failures;
  }
  return out;
}

SuiteResult suite_descent(std::uint64_t seed, std::size_t cases) {
  bregcut::CounterRng rng(seed ^ 0xdecu);
  SuiteResult out{"descent", cases, 0};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t m = 3 + rng.uniform_index(6);
    const std::size_t n = m + 1 + rng.uniform_index(8);
    const std::size_t s = 1 + rng.uniform_index(3);
    const bregcut::ProblemInstance inst = bregcut::generate_instance(
        m, n, s, bregcut::NoiseKind::kNone, 0.0, seed * 7919 + i);
    const bregcut::Kernel kernel = (i % 2 == 0)
                                       ? bregcut::Kernel::elastic_net(inst.lambda)
                                       : bregcut::Kernel::quadratic();
    const bregcut::InnerObjective obj =
        bregcut::InnerObjective::least_squares(inst.a, inst.b_obs);
    const double mu = kernel.mu();
    const double big_l = obj.lipschitz();

    bregcut::SolverConfig config;
    config.max_iters = 20;
    config.tolerances.grad_tol = 1e-13;
    config.feasible_point = inst.x_true;

    // Exact rule against the guaranteed per-step decrease, then a random
    // constant step against the weaker quadratic bound.
    bool ok = true;
    config.rule = bregcut::StepSizeRule::exact();
    const bregcut::SolveResult run_exact = bregcut::solve(kernel, obj, config);
    for (std::size_t r = 0; r + 1 < run_exact.trace.size(); ++r) {
      const auto& cur = run_exact.trace[r];
      const auto& next = run_exact.trace[r + 1];
      const double decrease = *cur.bregman_to_feasible - *next.bregman_to_feasible;
      const double bound =
          mu / (2.0 * big_l * big_l) * cur.grad_norm * cur.grad_norm;
      if (decrease < bound - 1e-10 * std::max(1.0, *cur.bregman_to_feasible)) {
        ok = false;
      }
    }

    const double t = rng.uniform(0.05, 1.95) * mu / big_l;
    config.rule = bregcut::StepSizeRule::constant(t);
    const bregcut::SolveResult run_const = bregcut::solve(kernel, obj, config);
    for (std::size_t r = 0; r + 1 < run_const.trace.size(); ++r) {
      const auto& cur = run_const.trace[r];
      const auto& next = run_const.trace[r + 1];
      const double decrease = *cur.bregman_to_feasible - *next.bregman_to_feasible;
      const double bound =
          (t / big_l - t * t / (2.0 * mu)) * cur.grad_norm * cur.grad_norm;
      if (decrease < bound - 1e-10 * std::max(1.0, *cur.bregman_to_feasible)) {
        ok = false;
      }
    }
    if (!ok) ++out.failures;
  }
  return out;
}

int run_check(std::uint64_t seed, std::size_t cases, bool inject_bug) {
  std::vector<SuiteResult> results;
  results.push_back(suite_three_point(seed, cases));
  results.push_back(suite_projection_vi(seed, cases, inject_bug));
  results.push_back(suite_dual_step_range(seed, cases, inject_bug));
  results.push_back(suite_descent(seed, std::max<std::size_t>(1, cases / 10)));

  bool all_pass = true;
  for (const SuiteResult& r : results) {
    const bool pass = r.failures == 0;
    all_pass = all_pass && pass;
    std::cout << "suite=" << r.name << " cases=" << r.cases
              << " failures=" << r.failures
              << " status=" << (pass ? "pass" : "fail") << "\n";
  }
  return all_pass ? kExitOk : kExitPropertyFailure;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Cut-and-project solver for bilevel sparse recovery"};
  app.require_subcommand(1);

  // generate
  std::size_t gen_m = 100, gen_n = 200, gen_sparsity = 10;
  std::string gen_noise = "none";
  double gen_scale = 1.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("generate", "Generate a problem instance");
  gen->add_option("--m", gen_m, "Rows of A")->required();
  gen->add_option("--n", gen_n, "Columns of A")->required();
  gen->add_option("--sparsity", gen_sparsity, "Nonzeros in the planted signal")
      ->required();
  gen->add_option("--noise", gen_noise, "Noise kind")
      ->check(CLI::IsMember({"none", "gaussian", "uniform"}));
  gen->add_option("--noise-scale", gen_scale,
                  "Radius factor c in sigma = c * ||raw noise||");
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--out", gen_out, "Output problem JSON path")->required();

  // solve
  SolveFlags sf;
  double sf_t = 0.0, sf_lambda = 0.0, sf_radius = 0.0;
  CLI::App* solve = app.add_subcommand("solve", "Run the cut-and-project solver");
  solve->add_option("--problem", sf.problem, "Problem JSON path")->required();
  solve->add_option("--kernel", sf.kernel, "Outer objective kernel")
      ->check(CLI::IsMember({"elasticnet", "quadratic"}));
  solve->add_option("--stepsize", sf.stepsize, "Step-size rule")
      ->check(CLI::IsMember({"exact", "constant", "dynamic"}));
  CLI::Option* t_opt =
      solve->add_option("--t", sf_t, "Constant step (default mu/L)");
  CLI::Option* lam_opt = solve->add_option(
      "--lambda", sf_lambda, "l1 weight override (default: instance lambda)");
  solve->add_option("--constraint", sf.constraint, "Target set for A x")
      ->check(CLI::IsMember({"point", "l2ball", "linfbox"}));
  CLI::Option* rad_opt = solve->add_option(
      "--radius", sf_radius, "Constraint radius (default: instance sigma)");
  solve->add_option("--max-iters", sf.max_iters, "Iteration cap");
  solve->add_option("--tol", sf.tol, "Gradient-norm stopping tolerance");
  solve->add_option("--trace", sf.trace, "Trace CSV output path");

  // reference
  ReferenceFlags rf;
  double rf_lambda = 0.0, rf_radius = 0.0;
  CLI::App* ref = app.add_subcommand(
      "reference", "Solve with the fast dual proximal gradient baseline");
  ref->add_option("--problem", rf.problem, "Problem JSON path")->required();
  ref->add_option("--kernel", rf.kernel, "Outer objective kernel")
      ->check(CLI::IsMember({"elasticnet", "quadratic"}));
  CLI::Option* ref_lam_opt = ref->add_option(
      "--lambda", rf_lambda, "l1 weight override (default: instance lambda)");
  ref->add_option("--constraint", rf.constraint, "Target set for A x")
      ->check(CLI::IsMember({"point", "l2ball", "linfbox"}));
  CLI::Option* ref_rad_opt = ref->add_option(
      "--radius", rf_radius, "Constraint radius (default: instance sigma)");
  ref->add_option("--max-iters", rf.max_iters, "Iteration cap");
  ref->add_option("--tol", rf.tol, "Dual displacement stopping tolerance");
  ref->add_option("--out", rf.out, "Output reference JSON path")->required();

  // check
  std::uint64_t check_seed = 1;
  std::size_t check_cases = 200;
  bool inject_bug = false;
  CLI::App* check = app.add_subcommand("check", "Run the oracle property suites");
  check->add_option("--seed", check_seed, "RNG seed");
  check->add_option("--cases", check_cases, "Cases per suite")
      ->check(CLI::PositiveNumber);
  check->add_flag("--inject-bug", inject_bug)->group("");

  // compare
  CompareFlags cf;
  double cf_t = 0.0, cf_lambda = 0.0, cf_radius = 0.0;
  CLI::App* cmp = app.add_subcommand(
      "compare", "Run several step rules on one instance and tabulate rates");
  cmp->add_option("--problem", cf.problem, "Problem JSON path")->required();
  cmp->add_option("--kernel", cf.kernel, "Outer objective kernel")
      ->check(CLI::IsMember({"elasticnet", "quadratic"}));
  CLI::Option* cmp_lam_opt = cmp->add_option(
      "--lambda", cf_lambda, "l1 weight override (default: instance lambda)");
  cmp->add_option("--constraint", cf.constraint, "Target set for A x")
      ->check(CLI::IsMember({"point", "l2ball", "linfbox"}));
  CLI::Option* cmp_rad_opt = cmp->add_option(
      "--radius", cf_radius, "Constraint radius (default: instance sigma)");
  cmp->add_option("--rules", cf.rules, "Comma-separated step rules")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"exact", "constant", "dynamic"}));
  CLI::Option* cmp_t_opt =
      cmp->add_option("--t", cf_t, "Constant step (default mu/L)");
  cmp->add_option("--max-iters", cf.max_iters, "Iteration cap");
  cmp->add_option("--tol", cf.tol, "Gradient-norm stopping tolerance");
  cmp->add_option("--out-dir", cf.out_dir, "Directory for traces and summary")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*gen) {
    const bregcut::ProblemInstance inst = bregcut::generate_instance(
        gen_m, gen_n, gen_sparsity, bregcut::noise_kind_from_string(gen_noise),
        gen_scale, gen_seed);
    bregcut::save_problem(inst, gen_out);
    std::cout << "sigma=" << fmt(inst.sigma) << " lambda=" << fmt(inst.lambda)
              << " out=" << gen_out << "\n";
    return kExitOk;
  }
  if (*solve) {
    if (*t_opt) sf.t = sf_t;
    if (*lam_opt) sf.lambda = sf_lambda;
    if (*rad_opt) sf.radius = sf_radius;
    return run_solve(sf);
  }
  if (*ref) {
    if (*ref_lam_opt) rf.lambda = rf_lambda;
    if (*ref_rad_opt) rf.radius = rf_radius;
    return run_reference(rf);
  }
  if (*check) return run_check(check_seed, check_cases, inject_bug);
  if (*cmp) {
    if (*cmp_t_opt) cf.t = cf_t;
    if (*cmp_lam_opt) cf.lambda = cf_lambda;
    if (*cmp_rad_opt) cf.radius = cf_radius;
    return run_compare(cf);
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const bregcut::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
