#include "gdet/apps.hpp"

#include <cmath>
#include <string>

#include "detail/dense.hpp"
#include "gdet/error.hpp"

namespace gdet {
namespace {

std::vector<double> residual(const Matrix& a, std::span<const double> x,
                             std::span<const double> b) {
  std::vector<double> r = multiply(a, x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

// Least-squares solution from a thin QR: R x = Q^T b.
std::vector<double> least_squares(const QRFactors& f, std::span<const double> b) {
  const std::size_t m = f.q.rows();
  const std::size_t n = f.q.cols();
  std::vector<double> y(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) y[j] += f.q(i, j) * b[i];
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f.r(i, j) * y[j];
    y[i] = s / f.r(i, i);
  }
  return y;
}

}  // namespace

CramerSolution cramer_solve(const Matrix& a, std::span<const double> b,
                            const ToleranceConfig& tol) {
  if (b.size() != a.rows()) {
    throw DimensionError("right-hand side has " + std::to_string(b.size()) +
                         " entries, A has " + std::to_string(a.rows()) + " rows");
  }
  const GdetResult whole = gdet(a, tol);
  if (whole.sign == SignValue::zero) {
    throw SingularError("Gdet(A) = 0: the system has no solution or infinitely many");
  }

  QRFactors f = [&] {
    try {
      return qr_factor(a, tol);
    } catch (const RankError&) {
      throw SingularError("A is numerically rank deficient");
    }
  }();
  const std::vector<double> x_ls = least_squares(f, b);
  const double ls_residual = euclidean_norm(residual(a, x_ls, b));
  const double scale = frobenius_norm(a) * euclidean_norm(x_ls) + euclidean_norm(b);
  if (!is_zero(ls_residual, scale, tol)) {
    throw InconsistentError("b is not in the column space of A (residual " +
                                std::to_string(ls_residual) + ")",
                            ls_residual);
  }

  CramerSolution sol;
  sol.x.resize(a.cols());
  sol.per_coordinate.resize(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    const double gi = gdet(replace_column(a, i + 1, b), tol).value;
    sol.per_coordinate[i] = {gi, whole.value};
    sol.x[i] = gi / whole.value;
  }
  sol.residual_norm = euclidean_norm(residual(a, sol.x, b));
  return sol;
}

bool in_subspace(const Matrix& basis, std::span<const double> x, const ToleranceConfig& tol) {
  if (x.size() != basis.rows()) throw DimensionError("point dimension differs from basis");
  if (basis.cols() >= basis.rows()) {
    throw DimensionError("basis must span a proper subspace (n < m)");
  }
  const GdetResult g = gdet(basis, tol);
  if (g.sign == SignValue::zero) throw DomainError("basis vectors are linearly dependent");
  const double augmented = detail::qr_magnitude(append_column(basis, x));
  return is_zero(augmented, g.magnitude * euclidean_norm(x), tol);
}

bool in_variety(const Matrix& basis, std::span<const double> offset, std::span<const double> x,
                const ToleranceConfig& tol) {
  if (offset.size() != x.size()) throw DimensionError("offset dimension differs from point");
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - offset[i];
  return in_subspace(basis, d, tol);
}

VolumeResult generalized_volume(const Matrix& generators, const ToleranceConfig& tol,
                                GdetPath path) {
  GdetResult g = gdet(generators, path, tol);
  return {g.magnitude, g.sign, std::move(g.principal), g.ill_conditioned_sign};
}

}  // namespace gdet
