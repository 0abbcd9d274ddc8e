#include "bregcut/stepsize.hpp"

#include <cmath>
#include <stdexcept>

namespace bregcut {

namespace {

// Accumulates w*(x_star - t a) and <a, mirror(x_star - t a)> in one pass
// without temporaries; the bisection calls this tens of times per cut.
struct DualEval {
  double conjugate = 0.0;
  double slope = 0.0;
};

DualEval eval_shifted(const Kernel& kernel, const Vec& x_star, const Vec& a,
                      double t) {
  if (x_star.size() != a.size()) {
    throw std::invalid_argument("dual evaluation: size mismatch");
  }
  const double lambda =
      kernel.kind() == Kernel::Kind::kElasticNet ? kernel.lambda() : 0.0;
  DualEval out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double m = detail::shrink(x_star[i] - t * a[i], lambda);
    out.conjugate += 0.5 * m * m;
    out.slope += a[i] * m;
  }
  return out;
}

}  // namespace

double dual_objective(const Kernel& kernel, const Vec& x_star, const Vec& a,
                      double beta, double t) {
  return eval_shifted(kernel, x_star, a, t).conjugate + beta * t;
}

double dual_derivative(const Kernel& kernel, const Vec& x_star, const Vec& a,
                       double beta, double t) {
  return -eval_shifted(kernel, x_star, a, t).slope + beta;
}

double exact_step(const Kernel& kernel, const Vec& x_star, const Vec& a,
                  double beta, double mu, double lipschitz,
                  double bisection_tol) {
  if (dot(a, a) == 0.0) {
    throw std::invalid_argument("exact_step: zero halfspace normal");
  }
  if (mu <= 0.0 || lipschitz <= 0.0 || bisection_tol <= 0.0) {
    throw std::invalid_argument("exact_step: parameters must be positive");
  }
  const double t_hi = mu / lipschitz;
  if (dual_derivative(kernel, x_star, a, beta, t_hi) <= 0.0) return t_hi;
  double lo = 0.0;
  double hi = t_hi;
  while (hi - lo > bisection_tol * t_hi) {
    const double mid = 0.5 * (lo + hi);
    if (dual_derivative(kernel, x_star, a, beta, mid) <= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double dynamic_step(const InnerObjective& obj, const Vec& x) {
  const Vec r = obj.residual(x);
  const double num = dot(r, r);
  const Vec g = obj.matrix().apply_transpose(r);
  const double den = dot(g, g);
  if (num == 0.0 || den == 0.0) {
    throw std::domain_error("dynamic_step: zero residual, iterate is optimal");
  }
  return num / den;
}

}  // namespace bregcut
