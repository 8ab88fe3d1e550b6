#include "gdet/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gdet/error.hpp"

namespace gdet {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw DimensionError("permutation of an empty set");
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t v : images_) {
    if (v < 1 || v > images_.size() || hit[v - 1]) {
      throw DimensionError("images are not a bijection of 1.." +
                           std::to_string(images_.size()));
    }
    hit[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::size_t> im(m);
  std::iota(im.begin(), im.end(), std::size_t{1});
  return Permutation(std::move(im));
}

Permutation Permutation::reversal(std::size_t m) {
  std::vector<std::size_t> im(m);
  for (std::size_t i = 0; i < m; ++i) im[i] = m - i;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::strong_ordering permutation_compare(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw DimensionError("permutations act on different sets");
  for (std::size_t t = sigma.size(); t >= 1; --t) {
    if (sigma(t) != tau(t)) return sigma(t) <=> tau(t);
  }
  return std::strong_ordering::equal;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw DimensionError("permutations act on different sets");
  std::vector<std::size_t> im(sigma.size());
  for (std::size_t i = 1; i <= sigma.size(); ++i) im[i - 1] = tau(sigma(i));
  return Permutation(std::move(im));
}

Matrix permutation_matrix(const Permutation& sigma) {
  const std::size_t m = sigma.size();
  std::vector<double> e(m * m, 0.0);
  for (std::size_t i = 1; i <= m; ++i) e[(i - 1) * m + (sigma(i) - 1)] = 1.0;
  return Matrix(m, m, std::move(e));
}

Matrix act(const Permutation& sigma, const Matrix& a) {
  if (sigma.size() != a.rows()) throw DimensionError("permutation size differs from row count");
  return row_select(a, sigma.images());
}

Matrix associated_square(const Permutation& sigma, const Matrix& a) {
  if (sigma.size() != a.rows()) throw DimensionError("permutation size differs from row count");
  if (a.rows() < a.cols()) throw DimensionError("A^sigma needs m >= n");
  const Permutation inv = sigma.inverse();
  return row_select(a, inv.images().first(a.cols()));
}

std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<std::size_t> im(m);
  std::iota(im.begin(), im.end(), std::size_t{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace gdet
