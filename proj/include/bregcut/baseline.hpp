#pragma once

#include <cstddef>
#include <optional>

#include "bregcut/kernels.hpp"
#include "bregcut/linalg.hpp"
#include "bregcut/objectives.hpp"

namespace bregcut {

struct FdpgConfig {
  std::size_t max_iters = 100000;
  /// Lipschitz constant of the dual gradient; computed as ||A||_2^2 / mu
  /// when absent.
  std::optional<double> step_l = std::nullopt;
  /// Stopping threshold on the dual iterate displacement ||y_{k+1} - y_k||.
  double tol = 1e-10;
};

struct FdpgResult {
  Vec x;
  bool converged = false;
  std::size_t iterations_used = 0;
};

/// Fast dual proximal gradient reference solver for
///
///   min_x  w(x)  subject to  A x in Q,
///
/// i.e. min w(x) + h(A x) with h the indicator of Q. Accelerated proximal
/// gradient on the negated dual: with L the dual gradient Lipschitz constant,
///
///   u_k     = mirror_map(A^T w_k)
///   y_{k+1} = w_k - (1/L) A u_k + (1/L) P_Q(A u_k - L w_k)
///   t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2
///   w_{k+1} = y_{k+1} + ((t_k - 1)/t_{k+1}) (y_{k+1} - y_k)
///
/// from w_0 = y_0 = 0, t_0 = 1. The last computed u_k is the returned primal
/// point; non-convergence within max_iters returns it with the flag unset.
FdpgResult fdpg_solve(const DenseMatrix& a, const ConvexSetQ& q,
                      const Kernel& kernel, const FdpgConfig& config);

}  // namespace bregcut
