#include <cmath>
#include <vector>

#include "detail/dense.hpp"
#include "gdet/error.hpp"
#include "gdet/gdet.hpp"

namespace gdet {
namespace {

// Householder QR in place on a column-major copy. Afterwards the upper
// triangle of `w` holds R and reflectors[k] holds the unit vector v_k
// (entries k..m-1) so that H_k = I - 2 v_k v_k^T.
struct Householder {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> w;  // column-major m x n
  std::vector<std::vector<double>> reflectors;

  double& at(std::size_t i, std::size_t j) { return w[j * m + i]; }
};

Householder householder(const Matrix& a) {
  Householder h;
  h.m = a.rows();
  h.n = a.cols();
  h.w.resize(h.m * h.n);
  for (std::size_t i = 0; i < h.m; ++i)
    for (std::size_t j = 0; j < h.n; ++j) h.at(i, j) = a(i, j);

  const std::size_t steps = std::min(h.m, h.n);
  h.reflectors.assign(steps, std::vector<double>(h.m, 0.0));
  for (std::size_t k = 0; k < steps; ++k) {
    std::span<const double> x(&h.w[k * h.m + k], h.m - k);
    const double norm_x = euclidean_norm(x);
    auto& v = h.reflectors[k];
    if (norm_x == 0.0) continue;  // zero column: H_k = I
    for (std::size_t i = k; i < h.m; ++i) v[i] = h.at(i, k);
    v[k] += (v[k] >= 0.0 ? 1.0 : -1.0) * norm_x;
    const double norm_v = euclidean_norm(std::span<const double>(&v[k], h.m - k));
    for (std::size_t i = k; i < h.m; ++i) v[i] /= norm_v;
    for (std::size_t j = k; j < h.n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < h.m; ++i) dot += v[i] * h.at(i, j);
      for (std::size_t i = k; i < h.m; ++i) h.at(i, j) -= 2.0 * dot * v[i];
    }
    for (std::size_t i = k + 1; i < h.m; ++i) h.at(i, k) = 0.0;
  }
  return h;
}

}  // namespace

namespace detail {

double qr_magnitude(const Matrix& a) {
  if (a.rows() < a.cols()) return 0.0;
  Householder h = householder(a);
  double p = 1.0;
  for (std::size_t k = 0; k < h.n; ++k) p *= std::abs(h.at(k, k));
  return p;
}

}  // namespace detail

QRFactors qr_factor(const Matrix& a, const ToleranceConfig& tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) throw DimensionError("QR factorization needs m >= n");
  Householder h = householder(a);

  double diag = 1.0;
  double col_bound = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    diag *= std::abs(h.at(k, k));
    col_bound *= euclidean_norm(a.column(k));
  }
  if (diag == 0.0 || is_zero(diag, col_bound, tol)) {
    throw RankError("matrix is not of full column rank");
  }

  std::vector<double> sgn(n);
  for (std::size_t k = 0; k < n; ++k) sgn[k] = h.at(k, k) < 0.0 ? -1.0 : 1.0;

  std::vector<double> r(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r[i * n + j] = sgn[i] * h.at(i, j);

  // Q = H_0 H_1 ... H_{n-1} I_{m x n}, applied right to left.
  std::vector<double> q(m * n, 0.0);  // row-major
  for (std::size_t j = 0; j < n; ++j) q[j * n + j] = 1.0;
  for (std::size_t kk = n; kk-- > 0;) {
    const auto& v = h.reflectors[kk];
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = kk; i < m; ++i) dot += v[i] * q[i * n + j];
      for (std::size_t i = kk; i < m; ++i) q[i * n + j] -= 2.0 * dot * v[i];
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i * n + j] *= sgn[j];

  return {Matrix(m, n, std::move(q)), Matrix(n, n, std::move(r))};
}

}  // namespace gdet
