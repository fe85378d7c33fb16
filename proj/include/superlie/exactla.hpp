#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "superlie/scalars.hpp"
#include "superlie/series.hpp"

namespace superlie {

class Singular : public std::domain_error {
 public:
  Singular() : std::domain_error("matrix is singular") {}
};

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix z(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const S& a = x(r, k);
        for (std::size_t c = 0; c < y.cols_; ++c) z(r, c) += a * y(k, c);
      }
    return z;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < x.data_.size(); ++k) x.data_[k] += y.data_[k];
    return x;
  }

  friend Matrix operator-(Matrix x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < x.data_.size(); ++k) x.data_[k] -= y.data_[k];
    return x;
  }

  friend Matrix operator*(const S& s, Matrix x) {
    for (auto& v : x.data_) v = s * v;
    return x;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> data_;
};

using FMatrix = Matrix<FieldElem>;
using SMatrix = Matrix<Series>;
using FVector = std::vector<FieldElem>;

struct RrefResult {
  FMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<FVector> kernel;
};

RrefResult rref(const FMatrix& m);
std::size_t rank(const FMatrix& m);
FMatrix inverse(const FMatrix& m);
FieldElem determinant(FMatrix m);
FVector mat_vec(const FMatrix& m, const FVector& v);

// Rows of the result span the same space as the input vectors, in RREF.
std::vector<FVector> span_basis(const std::vector<FVector>& vectors, std::size_t dim);

// Series Gauss-Jordan; throws Singular or InsufficientPrecision.
SMatrix inverse_series(const SMatrix& m, const Rational& cap = kDefaultPrecision);
std::vector<Series> solve_series(const SMatrix& m, const std::vector<Series>& b,
                                 const Rational& cap = kDefaultPrecision);
SMatrix to_series(const FMatrix& m);

std::string format_matrix(const FMatrix& m);

}  // namespace superlie
