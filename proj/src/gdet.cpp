#include "gdet/gdet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail/dense.hpp"
#include "gdet/error.hpp"

namespace gdet {
namespace {

GdetResult signed_result(SignValue s, double magnitude, PrincipalRows principal, bool ill) {
  GdetResult g;
  g.sign = s;
  g.magnitude = magnitude;
  g.value = to_int(s) * magnitude;
  g.principal = std::move(principal);
  g.ill_conditioned_sign = ill;
  return g;
}

CheckReport compare_sides(double lhs, double rhs, const ToleranceConfig& tol) {
  return {lhs, rhs, is_zero(lhs - rhs, std::max(std::abs(lhs), std::abs(rhs)), tol)};
}

}  // namespace

GdetResult gdet(const Matrix& a, const ToleranceConfig& tol) {
  SignAnalysis s = analyze_sign(a, tol);
  if (s.sign == SignValue::zero) return signed_result(SignValue::zero, 0.0, {}, s.ill_conditioned);
  return signed_result(s.sign, detail::qr_magnitude(a), std::move(s.principal),
                       s.ill_conditioned);
}

GdetResult gdet_minor_oracle(const Matrix& a, const ToleranceConfig& tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) return {};
  if (detail::binomial(m, n) > kMinorOracleMaxTuples) {
    throw CapacityError("C(" + std::to_string(m) + ", " + std::to_string(n) +
                        ") maximal minors exceed the enumeration guard");
  }
  double sum = 0.0;
  SignValue first = SignValue::zero;
  PrincipalRows principal;
  auto idx = detail::first_combination(n);
  do {
    const Matrix sq = row_select(a, idx);
    const double det = detail::lu_determinant(sq);
    sum += det * det;
    if (first == SignValue::zero && !is_zero(det, hadamard_row_bound(sq), tol)) {
      first = sign_of(det);
      principal.indices = idx;
    }
  } while (detail::next_combination(idx, m));
  if (first == SignValue::zero) return {};
  return signed_result(first, std::sqrt(sum), std::move(principal), false);
}

GdetResult gdet(const Matrix& a, GdetPath path, const ToleranceConfig& tol) {
  return path == GdetPath::qr ? gdet(a, tol) : gdet_minor_oracle(a, tol);
}

double gram_magnitude(const Matrix& a) {
  if (a.rows() < a.cols()) return 0.0;
  const Matrix g = gram(a);
  const std::size_t n = g.rows();
  std::vector<double> l(g.entries().begin(), g.entries().end());
  double det_sqrt = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = l[k * n + k];
    for (std::size_t p = 0; p < k; ++p) d -= l[k * n + p] * l[k * n + p];
    if (!(d > 0.0)) return 0.0;
    const double lkk = std::sqrt(d);
    l[k * n + k] = lkk;
    det_sqrt *= lkk;
    for (std::size_t i = k + 1; i < n; ++i) {
      double s = l[i * n + k];
      for (std::size_t p = 0; p < k; ++p) s -= l[i * n + p] * l[k * n + p];
      l[i * n + k] = s / lkk;
    }
  }
  return det_sqrt;
}

std::vector<double> singular_values(const Matrix& a) {
  // Work on the orientation with at least as many rows as columns; the
  // nonzero singular values of A and A^T coincide.
  const bool wide = a.rows() < a.cols();
  const Matrix b = wide ? transpose(a) : a;
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();
  std::vector<std::vector<double>> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = b.column(j);

  constexpr int kMaxSweeps = 80;
  constexpr double kEps = 1e-15;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += cols[p][i] * cols[p][i];
          beta += cols[q][i] * cols[q][i];
          gamma += cols[p][i] * cols[q][i];
        }
        if (gamma == 0.0 || std::abs(gamma) <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double x = cols[p][i];
          const double y = cols[q][i];
          cols[p][i] = c * x - s * y;
          cols[q][i] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(a.cols(), 0.0);
  for (std::size_t j = 0; j < n; ++j) sv[j] = euclidean_norm(cols[j]);
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

double singular_value_magnitude(const Matrix& a) {
  if (a.rows() < a.cols()) return 0.0;
  double p = 1.0;
  for (double s : singular_values(a)) p *= s;
  return p;
}

CheckReport check_multiplication(const Matrix& a, const Matrix& b, const ToleranceConfig& tol,
                                 GdetPath path) {
  if (b.rows() != b.cols()) throw DimensionError("right factor must be square");
  if (a.cols() != b.rows()) throw DimensionError("inner dimensions differ");
  const double lhs = gdet(multiply(a, b), path, tol).value;
  const double rhs = gdet(a, path, tol).value * gdet(b, path, tol).value;
  return compare_sides(lhs, rhs, tol);
}

CheckReport check_left_multiplication(const Matrix& b, const Matrix& a,
                                      const ToleranceConfig& tol, GdetPath path) {
  if (b.rows() != b.cols()) throw DimensionError("left factor must be square");
  if (b.cols() != a.rows()) throw DimensionError("inner dimensions differ");
  const double lhs = gdet(multiply(b, a), path, tol).value;
  const double rhs = gdet(b, path, tol).value * gdet(a, path, tol).value;
  return compare_sides(lhs, rhs, tol);
}

CauchyBinetReport check_cauchy_binet(const Matrix& a, std::size_t k,
                                     const ToleranceConfig& tol, GdetPath path) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (k < n || k > m) {
    throw DimensionError("k must satisfy n <= k <= m (n = " + std::to_string(n) +
                         ", m = " + std::to_string(m) + ", k = " + std::to_string(k) + ")");
  }
  if (detail::binomial(m, k) > kCauchyBinetMaxTuples) {
    throw CapacityError("C(" + std::to_string(m) + ", " + std::to_string(k) +
                        ") row subsets exceed the enumeration guard");
  }
  const GdetResult whole = gdet(a, path, tol);
  const double gram_det = whole.magnitude * whole.magnitude;

  double rhs = 0.0;
  auto idx = detail::first_combination(k);
  do {
    const double g = gdet(row_select(a, idx), path, tol).magnitude;
    rhs += g * g;
  } while (detail::next_combination(idx, m));

  CauchyBinetReport report;
  report.coefficient = detail::binomial(m - n, k - n);
  report.literal_coefficient = detail::binomial(k - n, m - n);
  const double lhs = static_cast<double>(report.coefficient) * gram_det;
  static_cast<CheckReport&>(report) = compare_sides(lhs, rhs, tol);
  report.literal_lhs = static_cast<double>(report.literal_coefficient) * gram_det;
  return report;
}

}  // namespace gdet
