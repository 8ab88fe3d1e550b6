#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gdet/matrix.hpp"

namespace gdet::detail {

/// Determinant of a square matrix by LU with partial pivoting.
double lu_determinant(const Matrix& a);

/// Product of |R_ii| from a Householder QR of a (m >= n), without the sign
/// system's rank clamp. Returns 0 for m < n.
double qr_magnitude(const Matrix& a);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Advances a strictly increasing 1-based k-tuple drawn from {1..m} to its
/// lexicographic successor. Returns false after the last tuple.
bool next_combination(std::vector<std::size_t>& idx, std::size_t m);

/// {1, 2, ..., k}.
std::vector<std::size_t> first_combination(std::size_t k);

}  // namespace gdet::detail
