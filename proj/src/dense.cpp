#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "detail/dense.hpp"
#include "gdet/error.hpp"

namespace gdet::detail {

double lu_determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<double> w(a.entries().begin(), a.entries().end());
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(w[i * n + k]) > std::abs(w[p * n + k])) p = i;
    if (w[p * n + k] == 0.0) return 0.0;
    if (p != k) {
      std::swap_ranges(w.begin() + k * n, w.begin() + (k + 1) * n, w.begin() + p * n);
      det = -det;
    }
    const double pivot = w[k * n + k];
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = w[i * n + k] / pivot;
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) w[i * n + j] -= f * w[k * n + j];
    }
  }
  return det;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact at every step; guard the multiplication.
    const std::uint64_t num = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t rr = r / g;
    const std::uint64_t ii = i / g;
    const std::uint64_t nn = num / ii;
    if (rr > std::numeric_limits<std::uint64_t>::max() / nn)
      return std::numeric_limits<std::uint64_t>::max();
    r = rr * nn;
  }
  return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < m - (k - 1 - i)) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{1});
  return idx;
}

}  // namespace gdet::detail
