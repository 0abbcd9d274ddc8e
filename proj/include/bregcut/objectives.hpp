#pragma once

#include "bregcut/linalg.hpp"

namespace bregcut {

/// Closed convex target set for the residual A x. Point sets have radius 0;
/// balls and boxes carry a nonnegative radius around their center.
class ConvexSetQ {
 public:
  enum class Kind { kPoint, kL2Ball, kLinfBox };

  static ConvexSetQ point(Vec b);
  static ConvexSetQ l2_ball(Vec center, double radius);
  static ConvexSetQ linf_box(Vec center, double radius);

  Kind kind() const { return kind_; }
  const Vec& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  ConvexSetQ(Kind kind, Vec center, double radius);

  Kind kind_;
  Vec center_;
  double radius_;
};

/// Euclidean projection onto Q.
Vec project_q(const ConvexSetQ& q, const Vec& y);

/// Distance from y to Q in the norm that defines the set: Euclidean for
/// points and l2 balls, sup-norm for boxes. Zero inside the set.
double set_distance(const ConvexSetQ& q, const Vec& y);

/// Largest eigenvalue of A^T A (= ||A||_2^2) by power iteration from the
/// normalized all-ones vector; deterministic, at most 10000 sweeps, stops
/// when the Rayleigh quotient stagnates below 1e-12 relative.
double spectral_norm_sq(const DenseMatrix& a);

/// Smooth inner objective f whose minimizers the bilevel solver selects
/// over. Two forms share one implementation:
///
///   least squares  f(x) = 0.5 * ||A x - b||^2
///   set distance   f(x) = 0.5 * dist^2(A x, Q)
///
/// Both have gradient A^T r(x) with r the residual (A x - b, respectively
/// A x - P_Q(A x)) and gradient Lipschitz constant ||A^T A||_2. The constant
/// is computed once at construction and inflated by 1 + 1e-9 so that the
/// cached value is never an underestimate.
class InnerObjective {
 public:
  enum class Kind { kLeastSquares, kDistSq };

  static InnerObjective least_squares(DenseMatrix a, Vec b);
  static InnerObjective dist_sq(DenseMatrix a, ConvexSetQ q);

  Kind kind() const { return kind_; }
  const DenseMatrix& matrix() const { return a_; }
  const ConvexSetQ& target() const { return q_; }
  double lipschitz() const { return lipschitz_; }

  /// A x - b, or A x - P_Q(A x).
  Vec residual(const Vec& x) const;
  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;
  /// ||residual(x)||_2; the feasibility column of solver traces.
  double feasibility(const Vec& x) const;

 private:
  InnerObjective(Kind kind, DenseMatrix a, ConvexSetQ q);

  Kind kind_;
  DenseMatrix a_;
  ConvexSetQ q_;
  double lipschitz_;
};

}  // namespace bregcut
