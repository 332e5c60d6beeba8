#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "wittkit/errors.hpp"

namespace wittkit {

using Complex = std::complex<double>;

// Dense complex matrix, row-major.
//
// The transpose used throughout is the plain, non-conjugating one: bilinear
// algebra over C never conjugates. conj_transposed() exists only for metric
// plumbing (unitary projectors, Euclidean norms) and must not leak into any
// bilinear-form computation.
class Matrix {
 public:
  Matrix() = default;

  // Zero-filled r x c matrix. Zero-sized blocks are legal values internally;
  // the file format and public entry points require positive dimensions.
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

  // Validates that every entry is finite.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const { return data_; }

  Matrix transposed() const;       // plain transpose, no conjugation
  Matrix conj_transposed() const;  // metric plumbing only
  Matrix conjugated() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Complex& scalar);

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const Matrix& b);
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Complex& s, Matrix a);
Matrix operator*(double s, Matrix a);

inline Matrix transpose(const Matrix& a) { return a.transposed(); }

// [a | b] and [a ; b]. Zero-sized operands pass through.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace wittkit
