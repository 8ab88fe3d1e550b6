#pragma once

#include <cstddef>
#include <vector>

#include "gdet/matrix.hpp"
#include "gdet/permutation.hpp"

namespace gdet {

enum class SignValue : int { negative = -1, zero = 0, positive = 1 };

constexpr int to_int(SignValue s) noexcept { return static_cast<int>(s); }

constexpr SignValue sign_of(double x) noexcept {
  return x > 0.0 ? SignValue::positive : (x < 0.0 ? SignValue::negative : SignValue::zero);
}

constexpr SignValue operator*(SignValue a, SignValue b) noexcept {
  return static_cast<SignValue>(to_int(a) * to_int(b));
}

/// Row indices (1-based, strictly increasing) of the principal submatrix.
/// Empty when no nonsingular n x n row submatrix exists.
struct PrincipalRows {
  std::vector<std::size_t> indices;

  bool empty() const noexcept { return indices.empty(); }
  bool operator==(const PrincipalRows&) const = default;
};

/// Everything the greedy row scan learns about a matrix.
struct SignAnalysis {
  SignValue sign = SignValue::zero;
  PrincipalRows principal;
  /// Some accept/reject decision in the scan was within a factor of 10 of
  /// the zero threshold, so the sign may flip under tiny perturbations.
  bool ill_conditioned = false;
};

/// Scans rows top to bottom, keeping each row that is independent of the
/// rows already kept, until n rows are kept. The kept rows are the
/// lexicographically first nonsingular n x n row submatrix; the sign of its
/// determinant comes from the elimination pivots.
///
/// A candidate is accepted when the running volume (product of kept pivots
/// times the candidate's pivot) is nonzero against the Hadamard bound of the
/// same rows under `tol`. For the full n rows this is exactly
/// is_zero(det, hadamard_row_bound, tol).
SignAnalysis analyze_sign(const Matrix& a, const ToleranceConfig& tol = {});

/// Lexicographically first nonsingular row subset. Empty for m < n or
/// rank < n.
PrincipalRows principal_rows(const Matrix& a, const ToleranceConfig& tol = {});

/// Sign of the determinant of the principal submatrix; zero for m < n or
/// rank-deficient matrices.
SignValue sign(const Matrix& a, const ToleranceConfig& tol = {});

// Brute-force reference over the symmetric group. Intended for tests and
// small inputs; both throw CapacityError for m > 8.

/// Maximum sigma (under permutation_compare) with det(A^sigma) != 0, or the
/// identity when no such sigma exists.
Permutation sigma_max_oracle(const Matrix& a, const ToleranceConfig& tol = {});

/// Sign of det(A^{sigma_A}) with sigma_A from sigma_max_oracle.
SignValue sign_oracle(const Matrix& a, const ToleranceConfig& tol = {});

inline constexpr std::size_t kSigmaOracleMaxRows = 8;

}  // namespace gdet
