#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gdet/gdet.hpp"
#include "gdet/matrix.hpp"
#include "gdet/sign.hpp"

namespace gdet {

struct CramerSolution {
  std::vector<double> x;
  double residual_norm = 0.0;  // ||A x - b||_2
  /// (Gdet(A_i), Gdet(A)) where A_i is A with column i replaced by b.
  std::vector<std::pair<double, double>> per_coordinate;
};

/// Solves a consistent system A x = b (m >= n) by x_i = Gdet(A_i) / Gdet(A).
///
/// Throws SingularError when Gdet(A) = 0 (no solution or infinitely many),
/// InconsistentError when b is not in the column space of A, judged by the
/// least-squares residual against tol * (||A||_F ||x_ls|| + ||b||), and
/// DimensionError when b has the wrong length.
CramerSolution cramer_solve(const Matrix& a, std::span<const double> b,
                            const ToleranceConfig& tol = {});

/// x lies in the span of the columns of `basis` iff Gdet(basis | x) = 0.
///
/// The test is |Gdet(basis | x)| against |Gdet(basis)| * ||x||, so it is
/// invariant under uniform scaling. The basis must span a proper subspace
/// (n < m, else DimensionError) and be independent (else DomainError).
bool in_subspace(const Matrix& basis, std::span<const double> x,
                 const ToleranceConfig& tol = {});

/// x lies in span(basis) + offset.
bool in_variety(const Matrix& basis, std::span<const double> offset,
                std::span<const double> x, const ToleranceConfig& tol = {});

struct VolumeResult {
  double volume = 0.0;
  SignValue orientation = SignValue::zero;
  /// Coordinate axes of the projection that carries the orientation.
  PrincipalRows principal;
  bool ill_conditioned_sign = false;
};

/// Oriented n-volume of the parallelepiped spanned by the columns of
/// `generators`. Degenerate generators (including n > m) give volume 0.
VolumeResult generalized_volume(const Matrix& generators, const ToleranceConfig& tol = {},
                                GdetPath path = GdetPath::qr);

}  // namespace gdet
