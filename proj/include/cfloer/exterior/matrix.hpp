#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "cfloer/errors.hpp"
#include "cfloer/scalars/field.hpp"

namespace cfloer {

/// Dense row-major matrix over a field scalar.
template <FieldScalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw RankMismatch("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  Matrix scaled(const S& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = x * s;
    return out;
  }

  bool is_zero_matrix(double tol = 0.0) const {
    for (const auto& x : data_)
      if (!is_zero(x, tol)) return false;
    return true;
  }

  /// Largest entry modulus, evaluated numerically.
  double max_abs() const {
    double m = 0;
    for (const auto& x : data_) m = std::max(m, std::abs(x.to_complex()));
    return m;
  }

  /// Rows of scalar strings, row-major.
  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_string((*this)(i, j)));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Exact backend: Gaussian elimination. Approximate backend: number of
/// singular values above tol * max(largest singular value, 1). The floor of
/// 1 keeps round-off-only matrices at rank 0; every matrix built here has
/// entries of order 1.
template <FieldScalar S>
std::size_t rank(const Matrix<S>& m, double tol = kDefaultTolerance) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if constexpr (is_exact_v<S>) {
    Matrix<S> a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
      std::size_t pivot = r;
      while (pivot < a.rows() && is_zero(a(pivot, c))) ++pivot;
      if (pivot == a.rows()) continue;
      if (pivot != r)
        for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
      const S inv = a(r, c).inverse();
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (is_zero(a(i, c))) continue;
        const S f = a(i, c) * inv;
        for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
      }
      ++r;
    }
    return r;
  } else {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = tol * std::max(sv(0), 1.0);
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++r;
    return r;
  }
}

}  // namespace cfloer
