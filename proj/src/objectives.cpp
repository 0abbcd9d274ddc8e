#include "bregcut/objectives.hpp"

#include <cmath>
#include <stdexcept>

namespace bregcut {

ConvexSetQ::ConvexSetQ(Kind kind, Vec center, double radius)
    : kind_(kind), center_(std::move(center)), radius_(radius) {
  if (center_.empty() || !all_finite(center_)) {
    throw std::invalid_argument("ConvexSetQ: center must be finite and nonempty");
  }
  if (radius_ < 0.0 || !std::isfinite(radius_)) {
    throw std::invalid_argument("ConvexSetQ: radius must be nonnegative");
  }
}

ConvexSetQ ConvexSetQ::point(Vec b) {
  return ConvexSetQ(Kind::kPoint, std::move(b), 0.0);
}

ConvexSetQ ConvexSetQ::l2_ball(Vec center, double radius) {
  return ConvexSetQ(Kind::kL2Ball, std::move(center), radius);
}

ConvexSetQ ConvexSetQ::linf_box(Vec center, double radius) {
  return ConvexSetQ(Kind::kLinfBox, std::move(center), radius);
}

Vec project_q(const ConvexSetQ& q, const Vec& y) {
  if (y.size() != q.center().size()) {
    throw std::invalid_argument("project_q: size mismatch");
  }
  switch (q.kind()) {
    case ConvexSetQ::Kind::kPoint:
      return q.center();
    case ConvexSetQ::Kind::kL2Ball: {
      const Vec r = subtract(y, q.center());
      const double nr = norm2(r);
      if (nr <= q.radius()) return y;
      return add_scaled(q.center(), q.radius() / nr, r);
    }
    case ConvexSetQ::Kind::kLinfBox: {
      Vec out(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) {
        const double lo = q.center()[i] - q.radius();
        const double hi = q.center()[i] + q.radius();
        out[i] = std::min(std::max(y[i], lo), hi);
      }
      return out;
    }
  }
  throw std::logic_error("project_q: unknown set kind");
}

double set_distance(const ConvexSetQ& q, const Vec& y) {
  if (y.size() != q.center().size()) {
    throw std::invalid_argument("set_distance: size mismatch");
  }
  switch (q.kind()) {
    case ConvexSetQ::Kind::kPoint:
      return norm2(subtract(y, q.center()));
    case ConvexSetQ::Kind::kL2Ball:
      return std::max(0.0, norm2(subtract(y, q.center())) - q.radius());
    case ConvexSetQ::Kind::kLinfBox:
      return std::max(0.0, norm_inf(subtract(y, q.center())) - q.radius());
  }
  throw std::logic_error("set_distance: unknown set kind");
}

double spectral_norm_sq(const DenseMatrix& a) {
  const std::size_t n = a.cols();
  double frob = 0.0;
  for (double v : a.entries()) frob += v * v;
  if (frob == 0.0) {
    throw std::invalid_argument("spectral_norm_sq: zero matrix");
  }

  Vec v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double lam = 0.0;
  std::size_t fallback = 0;
  for (int sweep = 0; sweep < 10000; ++sweep) {
    const Vec av = a.apply(v);
    const double lam_next = dot(av, av);  // Rayleigh quotient of A^T A
    Vec w = a.apply_transpose(av);
    const double nw = norm2(w);
    if (nw == 0.0) {
      // v landed in the kernel of A^T A; restart from a basis vector.
      v.assign(n, 0.0);
      v[fallback++ % n] = 1.0;
      continue;
    }
    for (double& wi : w) wi /= nw;
    v = std::move(w);
    if (sweep > 0 &&
        std::abs(lam_next - lam) <= 1e-12 * std::max(1.0, std::abs(lam_next))) {
      return lam_next;
    }
    lam = lam_next;
  }
  return lam;
}

InnerObjective::InnerObjective(Kind kind, DenseMatrix a, ConvexSetQ q)
    : kind_(kind), a_(std::move(a)), q_(std::move(q)) {
  if (q_.center().size() != a_.rows()) {
    throw std::invalid_argument("InnerObjective: target dimension mismatch");
  }
  // Inflate so the cached constant never underestimates ||A^T A||_2.
  lipschitz_ = spectral_norm_sq(a_) * (1.0 + 1e-9);
}

InnerObjective InnerObjective::least_squares(DenseMatrix a, Vec b) {
  ConvexSetQ q = ConvexSetQ::point(std::move(b));
  return InnerObjective(Kind::kLeastSquares, std::move(a), std::move(q));
}

InnerObjective InnerObjective::dist_sq(DenseMatrix a, ConvexSetQ q) {
  return InnerObjective(Kind::kDistSq, std::move(a), std::move(q));
}

Vec InnerObjective::residual(const Vec& x) const {
  const Vec y = a_.apply(x);
  if (kind_ == Kind::kLeastSquares) return subtract(y, q_.center());
  return subtract(y, project_q(q_, y));
}

double InnerObjective::value(const Vec& x) const {
  const Vec r = residual(x);
  return 0.5 * dot(r, r);
}

Vec InnerObjective::gradient(const Vec& x) const {
  return a_.apply_transpose(residual(x));
}

double InnerObjective::feasibility(const Vec& x) const {
  return norm2(residual(x));
}

}  // namespace bregcut
