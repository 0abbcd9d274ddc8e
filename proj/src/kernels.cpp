#include "bregcut/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace bregcut {

double soft_shrink_scalar(double v, double lambda) {
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw std::invalid_argument("soft_shrink: lambda must be nonnegative");
  }
  if (v > lambda) return v - lambda;
  if (v < -lambda) return v + lambda;
  return 0.0;
}

Vec soft_shrink(const Vec& v, double lambda) {
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw std::invalid_argument("soft_shrink: lambda must be nonnegative");
  }
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = detail::shrink(v[i], lambda);
  }
  return out;
}

Kernel Kernel::quadratic() { return Kernel(Kind::kQuadratic, 0.0); }

Kernel Kernel::elastic_net(double lambda) {
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw std::invalid_argument("Kernel: lambda must be nonnegative");
  }
  return Kernel(Kind::kElasticNet, lambda);
}

std::optional<double> Kernel::grad_lipschitz() const {
  if (kind_ == Kind::kQuadratic || lambda_ == 0.0) return 1.0;
  return std::nullopt;
}

double Kernel::value(const Vec& x) const {
  double sq = 0.0;
  double l1 = 0.0;
  for (double v : x) {
    sq += v * v;
    l1 += std::abs(v);
  }
  if (kind_ == Kind::kQuadratic) return 0.5 * sq;
  return lambda_ * l1 + 0.5 * sq;
}

double Kernel::conjugate_value(const Vec& x_star) const {
  double s = 0.0;
  if (kind_ == Kind::kQuadratic) {
    for (double v : x_star) s += v * v;
  } else {
    for (double v : x_star) {
      const double sv = detail::shrink(v, lambda_);
      s += sv * sv;
    }
  }
  return 0.5 * s;
}

Vec Kernel::mirror_map(const Vec& x_star) const {
  if (kind_ == Kind::kQuadratic) return x_star;
  return soft_shrink(x_star, lambda_);
}

Vec Kernel::initial_subgradient(const Vec& x0) const {
  Vec out(x0.size());
  if (kind_ == Kind::kQuadratic) return x0;
  for (std::size_t i = 0; i < x0.size(); ++i) {
    if (x0[i] > 0.0) {
      out[i] = x0[i] + lambda_;
    } else if (x0[i] < 0.0) {
      out[i] = x0[i] - lambda_;
    } else {
      out[i] = 0.0;
    }
  }
  return out;
}

}  // namespace bregcut
