#include "gdet/sign.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "detail/dense.hpp"
#include "gdet/error.hpp"

namespace gdet {
namespace {

// Threshold band used for the ill-conditioning advisory.
constexpr double kAmbiguityFactor = 10.0;

int parity(const std::vector<std::size_t>& order) {
  int s = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j]) s = -s;
  return s;
}

}  // namespace

SignAnalysis analyze_sign(const Matrix& a, const ToleranceConfig& tol) {
  SignAnalysis out;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) return out;

  std::vector<std::vector<double>> kept;  // reduced kept rows
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> rows;
  std::vector<bool> used(n, false);
  double volume = 1.0;  // |product of kept pivots|
  double bound = 1.0;   // product of kept row norms
  int pivot_sign = 1;

  for (std::size_t r = 0; r < m && kept.size() < n; ++r) {
    std::vector<double> v(a.row(r).begin(), a.row(r).end());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const double f = v[pivot_cols[k]] / kept[k][pivot_cols[k]];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) v[j] -= f * kept[k][j];
      v[pivot_cols[k]] = 0.0;
    }
    std::size_t q = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (q == n || std::abs(v[j]) > std::abs(v[q])) q = j;
    }
    const double cand_volume = volume * std::abs(v[q]);
    const double cand_bound = bound * euclidean_norm(a.row(r));
    const double threshold = std::max(tol.abs_zero, tol.rel_zero * cand_bound);
    if (cand_volume > threshold / kAmbiguityFactor &&
        cand_volume <= threshold * kAmbiguityFactor) {
      out.ill_conditioned = true;
    }
    if (is_zero(cand_volume, cand_bound, tol)) continue;

    volume = cand_volume;
    bound = cand_bound;
    if (v[q] < 0.0) pivot_sign = -pivot_sign;
    used[q] = true;
    pivot_cols.push_back(q);
    kept.push_back(std::move(v));
    rows.push_back(r + 1);
  }

  if (kept.size() < n) return out;
  out.principal.indices = std::move(rows);
  out.sign = pivot_sign * parity(pivot_cols) > 0 ? SignValue::positive : SignValue::negative;
  return out;
}

PrincipalRows principal_rows(const Matrix& a, const ToleranceConfig& tol) {
  return analyze_sign(a, tol).principal;
}

SignValue sign(const Matrix& a, const ToleranceConfig& tol) {
  return analyze_sign(a, tol).sign;
}

Permutation sigma_max_oracle(const Matrix& a, const ToleranceConfig& tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m > kSigmaOracleMaxRows) {
    throw CapacityError("sigma enumeration is limited to m <= " +
                        std::to_string(kSigmaOracleMaxRows));
  }
  if (m < n) return Permutation::identity(m);

  // Many permutations share the same A^sigma; memoize by the selected rows.
  std::map<std::vector<std::size_t>, bool> nonsingular;
  std::vector<std::size_t> images(m);
  std::iota(images.begin(), images.end(), std::size_t{1});
  std::vector<std::size_t> preimage(m);
  std::optional<Permutation> best;
  do {
    for (std::size_t i = 0; i < m; ++i) preimage[images[i] - 1] = i + 1;
    std::vector<std::size_t> selected(preimage.begin(), preimage.begin() + n);
    auto it = nonsingular.find(selected);
    if (it == nonsingular.end()) {
      const Matrix sq = row_select(a, selected);
      const bool ok = !is_zero(detail::lu_determinant(sq), hadamard_row_bound(sq), tol);
      it = nonsingular.emplace(std::move(selected), ok).first;
    }
    if (!it->second) continue;
    Permutation sigma(images);
    if (!best || permutation_compare(sigma, *best) > 0) best = std::move(sigma);
  } while (std::next_permutation(images.begin(), images.end()));

  return best ? *best : Permutation::identity(m);
}

SignValue sign_oracle(const Matrix& a, const ToleranceConfig& tol) {
  if (a.rows() < a.cols()) return SignValue::zero;
  const Permutation sigma = sigma_max_oracle(a, tol);
  const Matrix sq = associated_square(sigma, a);
  const double det = detail::lu_determinant(sq);
  if (is_zero(det, hadamard_row_bound(sq), tol)) return SignValue::zero;
  return sign_of(det);
}

}  // namespace gdet
