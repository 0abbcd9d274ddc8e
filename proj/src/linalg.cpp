#include "bregcut/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace bregcut {

namespace {

void require_same_size(const Vec& a, const Vec& b, const char* where) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(where) + ": size mismatch");
  }
}

}  // namespace

double dot(const Vec& a, const Vec& b) {
  require_same_size(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double norm1(const Vec& a) {
  double s = 0.0;
  for (double v : a) s += std::abs(v);
  return s;
}

double norm_inf(const Vec& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

Vec add_scaled(const Vec& a, double s, const Vec& b) {
  require_same_size(a, b, "add_scaled");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

Vec subtract(const Vec& a, const Vec& b) {
  require_same_size(a, b, "subtract");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec zeros(std::size_t n) { return Vec(n, 0.0); }

bool all_finite(const Vec& a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Vec entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("DenseMatrix: dimensions must be positive");
  }
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("DenseMatrix: entry count mismatch");
  }
  if (!all_finite(entries_)) {
    throw std::invalid_argument("DenseMatrix: non-finite entry");
  }
}

Vec DenseMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("DenseMatrix::apply: size mismatch");
  }
  Vec out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* row = entries_.data() + i * cols_;
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
    out[i] = s;
  }
  return out;
}

Vec DenseMatrix::apply_transpose(const Vec& y) const {
  if (y.size() != rows_) {
    throw std::invalid_argument("DenseMatrix::apply_transpose: size mismatch");
  }
  Vec out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* row = entries_.data() + i * cols_;
    const double yi = y[i];
    for (std::size_t j = 0; j < cols_; ++j) out[j] += row[j] * yi;
  }
  return out;
}

}  // namespace bregcut
