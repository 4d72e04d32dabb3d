#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "workbench/integer.hpp"

namespace workbench {

/// Dense row-major integer matrix. Rectangular shapes (including 0 rows or
/// 0 columns) are allowed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;

  /// Horizontal concatenation [*this | rhs]; row counts must agree.
  Matrix hcat(const Matrix& rhs) const;
  /// Columns [first, first+count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  void append_column(const std::vector<Integer>& col);

  bool is_zero() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Integer& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Integer& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Integer> operator*(const Matrix& a, const std::vector<Integer>& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Entries reduced to 0..p-1.
  Matrix mod(long p) const;

  /// Rows printed as comma-separated entries, one row per line.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const Matrix& m);

}  // namespace workbench
