#pragma once

#include <cstddef>
#include <vector>

namespace bregcut {

/// Dense vector of 64-bit floats. All library entry points expect finite
/// entries; matrices validate this on construction.
using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm1(const Vec& a);
double norm_inf(const Vec& a);

/// a + s * b
Vec add_scaled(const Vec& a, double s, const Vec& b);
Vec subtract(const Vec& a, const Vec& b);
Vec zeros(std::size_t n);
bool all_finite(const Vec& a);

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, Vec entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const Vec& entries() const { return entries_; }

  /// A x
  Vec apply(const Vec& x) const;
  /// A^T y
  Vec apply_transpose(const Vec& y) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Vec entries_;
};

}  // namespace bregcut
