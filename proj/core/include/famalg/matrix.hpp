#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "famalg/errors.hpp"
#include "famalg/rational.hpp"

namespace famalg {

/// Row-major dense matrix.
template <class T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T &fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] const std::vector<T> &data() const noexcept { return data_; }
  [[nodiscard]] std::vector<T> &data() noexcept { return data_; }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix operator*(const Rational &c, const RationalMatrix &a);
std::vector<Rational> operator*(const RationalMatrix &a, const std::vector<Rational> &v);
RationalMatrix transpose(const RationalMatrix &a);
Rational trace(const RationalMatrix &a);
/// Exact inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix &a);
Rational determinant(const RationalMatrix &a);
bool is_zero(const RationalMatrix &a);

} // namespace famalg
