#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "gdet/matrix.hpp"

namespace gdet {

/// Bijection on {1..m}, stored as its images: images()[i-1] = sigma(i).
///
/// Permutations are totally ordered by comparing images from the LAST
/// position downwards: sigma > tau iff at the largest t where they differ,
/// sigma(t) > tau(t). Under this order the identity is the maximum and
/// i -> m-i+1 the minimum.
class Permutation {
 public:
  /// Throws DimensionError unless images is a bijection of {1..m}, m >= 1.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t m);
  /// i -> m - i + 1.
  static Permutation reversal(std::size_t m);

  std::size_t size() const noexcept { return images_.size(); }
  /// sigma(i), 1-based.
  std::size_t operator()(std::size_t i) const noexcept { return images_[i - 1]; }
  std::span<const std::size_t> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

/// Throws DimensionError on a size mismatch.
std::strong_ordering permutation_compare(const Permutation& sigma, const Permutation& tau);

/// Product matching permutation-matrix multiplication:
/// Phi(sigma * tau) = Phi(sigma) Phi(tau), i.e. (sigma * tau)(i) = tau(sigma(i)).
/// With this product act() is a left action: act(s * t, A) = act(s, act(t, A)).
Permutation operator*(const Permutation& sigma, const Permutation& tau);

/// The permutation matrix Phi(sigma) whose row i is e_{sigma(i)}^T.
Matrix permutation_matrix(const Permutation& sigma);

/// Phi(sigma) A: row i of the result is row sigma(i) of A.
Matrix act(const Permutation& sigma, const Matrix& a);

/// A^sigma = P_sigma^T A for an m x n matrix (m >= n): the n x n matrix whose
/// row k is row sigma^{-1}(k) of A.
Matrix associated_square(const Permutation& sigma, const Matrix& a);

/// All m! permutations of {1..m} in ascending lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t m);

}  // namespace gdet
