#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bregcut/cuts.hpp"
#include "bregcut/kernels.hpp"
#include "bregcut/linalg.hpp"
#include "bregcut/objectives.hpp"
#include "bregcut/solver.hpp"

namespace bregcut {

/// File-system failures raised by the trace/problem writers and readers.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NoiseKind { kNone, kGaussian, kUniform };

const char* to_string(NoiseKind kind);
NoiseKind noise_kind_from_string(const std::string& name);

/// A generated sparse-recovery instance. sigma records the constraint radius
/// c * ||b_clean - b_obs|| in the norm matching the noise kind (l2 for
/// Gaussian, sup for uniform, 0 without noise); lambda is ||x_true||_1.
struct ProblemInstance {
  DenseMatrix a;
  Vec x_true;
  Vec b_clean;
  Vec b_obs;
  NoiseKind noise = NoiseKind::kNone;
  double sigma = 0.0;
  double lambda = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic instance generator. Draw order is frozen: the m*n matrix
/// entries row by row (standard normals), then the s support positions
/// (partial Fisher-Yates), then per position a sign and a magnitude
/// 1 + |N(0,1)|, then the m raw noise draws. The noise itself is added at
/// full strength; noise_scale only scales the recorded radius sigma, so for
/// noise_scale != 1 the target ball need not contain the clean data.
ProblemInstance generate_instance(std::size_t m, std::size_t n,
                                  std::size_t sparsity, NoiseKind kind,
                                  double noise_scale, std::uint64_t seed);

struct Metrics {
  double recon_err = 0.0;
  double omega_val = 0.0;
  double feas = 0.0;
};

/// Reconstruction error ||x - x_true||_2, elastic-net value with the
/// instance's lambda, and set_distance(q, A x).
Metrics metrics(const ProblemInstance& instance, const Vec& x,
                const ConvexSetQ& q);

/// Test-only reference for the Bregman projection onto a halfspace: scans
/// the mirror path t -> mirror_map(x_star - t a) over a dense grid on
/// [0, 2 mu / L] (the cut geometry encodes L through its separation margin),
/// keeps the feasible candidate of least Bregman distance, and refines the
/// winning bracket by golden section. Independent of the dual bisection used
/// by the solver. Throws when no grid candidate lands in the halfspace.
Vec oracle_bregman_projection(const Kernel& kernel, const Vec& x_star,
                              const Halfspace& h, std::size_t grid_points);

struct RateFit {
  double slope = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of log(column) against the iteration index over
/// trace rows with start <= k <= end. Columns are addressed by their CSV
/// header name. Nonpositive or missing values in the window are an error.
RateFit fit_linear_rate(const std::vector<IterationRecord>& trace,
                        const std::string& column, std::size_t start,
                        std::size_t end);

/// Trace CSV with header
///   k,t_k,grad_norm,f_val,omega_val,feas,recon_err,bregman_to_feasible
/// one row per record, absent optionals as empty cells, every number in its
/// shortest round-trip decimal form, LF line endings.
void write_trace_csv(const std::vector<IterationRecord>& trace,
                     const std::string& path);
std::vector<IterationRecord> read_trace_csv(const std::string& path);

/// Problem JSON with fields m, n, seed, lambda, sigma, noise_kind, and the
/// row-major matrix plus x_true / b_clean / b_obs arrays.
void save_problem(const ProblemInstance& instance, const std::string& path);
ProblemInstance load_problem(const std::string& path);

}  // namespace bregcut
