#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gdet {

/// Numeric-zero policy shared by every rank and sign decision.
///
/// A quantity v measured against a natural scale s is treated as zero when
/// |v| <= max(abs_zero, rel_zero * s).
struct ToleranceConfig {
  double rel_zero = 1e-10;
  double abs_zero = 1e-12;

  /// Throws DomainError if either field is negative or non-finite.
  void validate() const;
};

bool is_zero(double value, double scale, const ToleranceConfig& tol = {});

/// Dense real matrix, row-major, immutable after construction.
///
/// Every entry is finite and both dimensions are at least 1. Element access
/// through operator() is 0-based; index sequences passed to the free
/// functions below (row_select and friends) are 1-based.
class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries. Throws DimensionError on a size
  /// mismatch or empty shape, DomainError on a non-finite entry.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix from_columns(const std::vector<std::vector<double>>& columns);
  /// m x 1 matrix holding v.
  static Matrix column_vector(std::span<const double> v);
  /// Rectangular identity I_{rows x cols}: ones on the leading diagonal.
  static Matrix identity(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<const double> entries() const noexcept { return entries_; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }
  std::vector<double> column(std::size_t j) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

Matrix transpose(const Matrix& a);

/// Throws DimensionError when a.cols() != b.rows().
Matrix multiply(const Matrix& a, const Matrix& b);

/// y = A x. Throws DimensionError when x.size() != a.cols().
std::vector<double> multiply(const Matrix& a, std::span<const double> x);

/// A^T A, symmetrized so that the result is exactly symmetric.
Matrix gram(const Matrix& a);

/// Rows of a picked in the given order. Indices are 1-based, in range and
/// pairwise distinct; otherwise DimensionError.
Matrix row_select(const Matrix& a, std::span<const std::size_t> indices);

/// Copy of a with column j (1-based) replaced by v.
Matrix replace_column(const Matrix& a, std::size_t j, std::span<const double> v);

/// [a | v], one extra column.
Matrix append_column(const Matrix& a, std::span<const double> v);

double frobenius_norm(const Matrix& a);
double euclidean_norm(std::span<const double> v);

/// Product of the Euclidean norms of the rows. Bounds |det| of a square
/// matrix (Hadamard's inequality).
double hadamard_row_bound(const Matrix& a);

}  // namespace gdet
