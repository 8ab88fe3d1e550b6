#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdet/matrix.hpp"
#include "gdet/sign.hpp"

namespace gdet {

/// Generalized determinant of an m x n matrix.
///
/// value == to_int(sign) * magnitude. sign is zero exactly when magnitude is
/// zero and principal is empty: the matrix is wide (m < n) or not of full
/// column rank.
struct GdetResult {
  SignValue sign = SignValue::zero;
  double magnitude = 0.0;
  double value = 0.0;
  PrincipalRows principal;
  bool ill_conditioned_sign = false;
};

/// Thin QR with R's diagonal strictly positive.
struct QRFactors {
  Matrix q;  // m x n, orthonormal columns
  Matrix r;  // n x n, upper triangular
};

enum class GdetPath {
  qr,         // Householder QR, O(m n^2)
  minor_sum,  // literal sum over all maximal minors
};

/// Sign from the greedy row scan, magnitude = prod |R_ii| of a Householder
/// QR (equal to sqrt(det(A^T A))). Rank-deficient and wide matrices give an
/// exact zero.
GdetResult gdet(const Matrix& a, const ToleranceConfig& tol = {});

/// Definitional reference: magnitude = sqrt(sum of squared n x n minors over
/// increasing row tuples), sign from the first minor (in lexicographic
/// order) that is nonzero under `tol`. Throws CapacityError when C(m, n)
/// exceeds kMinorOracleMaxTuples.
GdetResult gdet_minor_oracle(const Matrix& a, const ToleranceConfig& tol = {});

inline constexpr std::uint64_t kMinorOracleMaxTuples = 1'000'000;

/// Dispatch on path.
GdetResult gdet(const Matrix& a, GdetPath path, const ToleranceConfig& tol = {});

/// sqrt(det(A^T A)) via Cholesky of the Gram matrix; 0 when the Gram matrix
/// is not numerically positive definite or m < n.
double gram_magnitude(const Matrix& a);

/// Householder QR with R's diagonal made positive by flipping the signs of
/// matching rows of R and columns of Q. Throws RankError when
/// prod |R_ii| is zero against the product of column norms, and
/// DimensionError for m < n.
QRFactors qr_factor(const Matrix& a, const ToleranceConfig& tol = {});

/// Singular values in descending order (one-sided Jacobi, which diagonalizes
/// A^T A implicitly). For m < n the trailing n - m values are 0.
std::vector<double> singular_values(const Matrix& a);

/// Product of the n singular values of a.
double singular_value_magnitude(const Matrix& a);

/// Both sides of an identity plus the verdict.
struct CheckReport {
  double lhs = 0.0;
  double rhs = 0.0;
  /// |lhs - rhs| is zero against max(|lhs|, |rhs|) under the tolerance.
  bool holds = false;
};

/// Gdet(A B) against Gdet(A) Gdet(B) for square B. Throws DimensionError if
/// B is not square or the shapes do not chain.
CheckReport check_multiplication(const Matrix& a, const Matrix& b,
                                 const ToleranceConfig& tol = {},
                                 GdetPath path = GdetPath::qr);

/// Gdet(B A) against Gdet(B) Gdet(A) for square B on the left. This law is
/// false in general; the report shows by how much.
CheckReport check_left_multiplication(const Matrix& b, const Matrix& a,
                                      const ToleranceConfig& tol = {},
                                      GdetPath path = GdetPath::qr);

struct CauchyBinetReport : CheckReport {
  /// C(m - n, k - n): supersets of a fixed n-tuple among k-tuples.
  std::uint64_t coefficient = 0;
  /// C(k - n, m - n), the coefficient as literally typeset (top k - n,
  /// bottom m - n). Differs from `coefficient` unless k == m.
  std::uint64_t literal_coefficient = 0;
  /// literal_coefficient * det(A^T A).
  double literal_lhs = 0.0;
};

/// lhs = C(m - n, k - n) det(A^T A); rhs = sum over increasing k-tuples of
/// Gdet(A_{i_1..i_k})^2. Throws DimensionError unless n <= k <= m, and
/// CapacityError when C(m, k) exceeds kCauchyBinetMaxTuples.
CauchyBinetReport check_cauchy_binet(const Matrix& a, std::size_t k,
                                     const ToleranceConfig& tol = {},
                                     GdetPath path = GdetPath::qr);

inline constexpr std::uint64_t kCauchyBinetMaxTuples = 100'000;

}  // namespace gdet
