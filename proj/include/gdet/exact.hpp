#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gdet/matrix.hpp"

namespace gdet {

using BigInt = boost::multiprecision::cpp_int;

struct ExactGdet {
  int sign = 0;  // sign of the lexicographically first nonzero maximal minor
  BigInt magnitude_squared = 0;  // exact sum of squared maximal minors
  std::vector<std::size_t> principal;  // 1-based rows of that minor
};

/// Integer-exact Gdet: every maximal minor by fraction-free (Bareiss)
/// elimination.
///
/// Entries must be integers with |a_ij| <= 2^20 (DomainError otherwise) and
/// C(m, n) must not exceed kExactOracleMaxTuples (CapacityError). Wide
/// matrices give (0, 0).
ExactGdet gdet_exact_oracle(const Matrix& a);

/// Exact determinant of a square integer matrix.
BigInt bareiss_determinant(const std::vector<std::vector<BigInt>>& rows);

inline constexpr std::uint64_t kExactOracleMaxTuples = 100'000;
inline constexpr double kExactOracleMaxEntry = 1048576.0;  // 2^20

}  // namespace gdet
