#include "gdet/exact.hpp"

#include <cmath>
#include <utility>

#include "detail/dense.hpp"
#include "gdet/error.hpp"

namespace gdet {

BigInt bareiss_determinant(const std::vector<std::vector<BigInt>>& rows) {
  auto w = rows;
  const std::size_t n = w.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && w[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(w[k], w[p]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Division is exact (Sylvester's identity).
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
      }
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  return sgn * w[n - 1][n - 1];
}

ExactGdet gdet_exact_oracle(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::vector<BigInt>> ints(m, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double x = a(i, j);
      if (std::trunc(x) != x || std::abs(x) > kExactOracleMaxEntry) {
        throw DomainError("exact oracle needs integer entries with |x| <= 2^20; entry (" +
                          std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") is " +
                          std::to_string(x));
      }
      ints[i][j] = static_cast<long long>(x);
    }

  ExactGdet out;
  if (m < n) return out;
  if (detail::binomial(m, n) > kExactOracleMaxTuples) {
    throw CapacityError("C(" + std::to_string(m) + ", " + std::to_string(n) +
                        ") maximal minors exceed the exact enumeration guard");
  }
  auto idx = detail::first_combination(n);
  std::vector<std::vector<BigInt>> sub(n);
  do {
    for (std::size_t r = 0; r < n; ++r) sub[r] = ints[idx[r] - 1];
    const BigInt det = bareiss_determinant(sub);
    out.magnitude_squared += det * det;
    if (out.sign == 0 && det != 0) {
      out.sign = det > 0 ? 1 : -1;
      out.principal = idx;
    }
  } while (detail::next_combination(idx, m));
  return out;
}

}  // namespace gdet
