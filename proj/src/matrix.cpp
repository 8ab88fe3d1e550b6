#include "gdet/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gdet/error.hpp"

namespace gdet {

void ToleranceConfig::validate() const {
  if (!std::isfinite(rel_zero) || !std::isfinite(abs_zero) || rel_zero < 0.0 ||
      abs_zero < 0.0) {
    throw DomainError("tolerances must be finite and nonnegative");
  }
}

bool is_zero(double value, double scale, const ToleranceConfig& tol) {
  return std::abs(value) <= std::max(tol.abs_zero, tol.rel_zero * scale);
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : Matrix(rows, cols, std::vector<double>(rows * cols, 0.0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("matrix must have at least one row and one column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("expected " + std::to_string(rows_ * cols_) +
                         " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k])) {
      throw DomainError("non-finite entry at (" + std::to_string(k / cols_ + 1) +
                        ", " + std::to_string(k % cols_ + 1) + ")");
    }
  }
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DimensionError("no rows");
  const std::size_t n = rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionError("ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), n, std::move(entries));
}

Matrix Matrix::from_columns(const std::vector<std::vector<double>>& columns) {
  if (columns.empty()) throw DimensionError("no columns");
  const std::size_t m = columns.front().size();
  const std::size_t n = columns.size();
  std::vector<double> entries(m * n);
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != m) throw DimensionError("columns differ in length");
    for (std::size_t i = 0; i < m; ++i) entries[i * n + j] = columns[j][i];
  }
  return Matrix(m, n, std::move(entries));
}

Matrix Matrix::column_vector(std::span<const double> v) {
  return Matrix(v.size(), 1, std::vector<double>(v.begin(), v.end()));
}

Matrix Matrix::identity(std::size_t rows, std::size_t cols) {
  std::vector<double> entries(rows * cols, 0.0);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) entries[i * cols + i] = 1.0;
  return Matrix(rows, cols, std::move(entries));
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix transpose(const Matrix& a) {
  std::vector<double> t(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t[j * a.rows() + i] = a(i, j);
  return Matrix(a.cols(), a.rows(), std::move(t));
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
  std::vector<double> c(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c[i * b.cols() + j] += aik * b(k, j);
    }
  return Matrix(a.rows(), b.cols(), std::move(c));
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) throw DimensionError("vector length does not match columns");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Matrix gram(const Matrix& a) {
  const std::size_t n = a.cols();
  std::vector<double> g(n * n, 0.0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) {
      double s = 0.0;
      for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, p) * a(i, q);
      g[p * n + q] = s;
      g[q * n + p] = s;
    }
  return Matrix(n, n, std::move(g));
}

Matrix row_select(const Matrix& a, std::span<const std::size_t> indices) {
  if (indices.empty()) throw DimensionError("empty row selection");
  std::vector<bool> seen(a.rows(), false);
  std::vector<double> out;
  out.reserve(indices.size() * a.cols());
  for (std::size_t idx : indices) {
    if (idx < 1 || idx > a.rows()) {
      throw DimensionError("row index " + std::to_string(idx) + " outside 1.." +
                           std::to_string(a.rows()));
    }
    if (seen[idx - 1]) throw DimensionError("duplicate row index " + std::to_string(idx));
    seen[idx - 1] = true;
    const auto r = a.row(idx - 1);
    out.insert(out.end(), r.begin(), r.end());
  }
  return Matrix(indices.size(), a.cols(), std::move(out));
}

Matrix replace_column(const Matrix& a, std::size_t j, std::span<const double> v) {
  if (j < 1 || j > a.cols()) throw DimensionError("column index out of range");
  if (v.size() != a.rows()) throw DimensionError("replacement column has wrong length");
  std::vector<double> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < a.rows(); ++i) e[i * a.cols() + (j - 1)] = v[i];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix append_column(const Matrix& a, std::span<const double> v) {
  if (v.size() != a.rows()) throw DimensionError("appended column has wrong length");
  const std::size_t n = a.cols() + 1;
  std::vector<double> e(a.rows() * n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) e[i * n + j] = a(i, j);
    e[i * n + a.cols()] = v[i];
  }
  return Matrix(a.rows(), n, std::move(e));
}

double euclidean_norm(std::span<const double> v) {
  // Scaled accumulation avoids overflow for large entries.
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double x : v) s += (x / scale) * (x / scale);
  return scale * std::sqrt(s);
}

double frobenius_norm(const Matrix& a) { return euclidean_norm(a.entries()); }

double hadamard_row_bound(const Matrix& a) {
  double p = 1.0;
  for (std::size_t i = 0; i < a.rows(); ++i) p *= euclidean_norm(a.row(i));
  return p;
}

}  // namespace gdet
