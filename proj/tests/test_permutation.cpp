#include <gtest/gtest.h>

#include "gdet/error.hpp"
#include "gdet/permutation.hpp"
#include "support/oracles.hpp"

using namespace gdet;

namespace {

Permutation perm(std::initializer_list<std::size_t> images) {
  return Permutation(std::vector<std::size_t>(images));
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(perm({1, 1}), DimensionError);
  EXPECT_THROW(perm({0, 1}), DimensionError);
  EXPECT_THROW(perm({1, 3}), DimensionError);
  EXPECT_THROW(Permutation(std::vector<std::size_t>{}), DimensionError);
}

TEST(Permutation, CompareExamples) {
  EXPECT_EQ(permutation_compare(Permutation::identity(3), perm({2, 1, 3})),
            std::strong_ordering::greater);
  EXPECT_EQ(permutation_compare(Permutation::identity(3), Permutation::identity(3)),
            std::strong_ordering::equal);
  for (const Permutation& other : all_permutations(3)) {
    if (other == perm({3, 2, 1})) continue;
    EXPECT_EQ(permutation_compare(perm({3, 2, 1}), other), std::strong_ordering::less);
  }
  EXPECT_THROW(permutation_compare(Permutation::identity(2), Permutation::identity(3)),
               DimensionError);
}

TEST(Permutation, CompareLooksAtLastDifferingPosition) {
  // Differ at positions 1 and 2; position 2 decides.
  EXPECT_EQ(permutation_compare(perm({1, 3, 2}), perm({3, 1, 2})), std::strong_ordering::greater);
}

TEST(Permutation, StrictTotalOrderExhaustive) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto all = all_permutations(m);
    for (const auto& s : all) {
      EXPECT_EQ(permutation_compare(s, s), std::strong_ordering::equal);
      for (const auto& t : all) {
        const auto st = permutation_compare(s, t);
        const auto ts = permutation_compare(t, s);
        EXPECT_EQ(st == std::strong_ordering::equal, s == t);
        EXPECT_EQ(st == std::strong_ordering::less, ts == std::strong_ordering::greater);
      }
    }
    // Transitivity over all triples for m <= 4, a random sample for m = 5.
    ref::Rng rng(m);
    const std::size_t triples = m <= 4 ? all.size() * all.size() * all.size() : 200000;
    for (std::size_t k = 0; k < triples; ++k) {
      const auto& a = m <= 4 ? all[k / (all.size() * all.size())] : all[rng.index(0, all.size() - 1)];
      const auto& b = m <= 4 ? all[(k / all.size()) % all.size()] : all[rng.index(0, all.size() - 1)];
      const auto& c = m <= 4 ? all[k % all.size()] : all[rng.index(0, all.size() - 1)];
      if (permutation_compare(a, b) > 0 && permutation_compare(b, c) > 0) {
        ASSERT_TRUE(std::is_gt(permutation_compare(a, c)));
      }
    }
    // Unique maximum and minimum.
    for (const auto& s : all) {
      if (!s.is_identity()) EXPECT_TRUE(std::is_lt(permutation_compare(s, Permutation::identity(m))));
      if (s != Permutation::reversal(m)) EXPECT_TRUE(std::is_gt(permutation_compare(s, Permutation::reversal(m))));
    }
  }
}

TEST(Permutation, SortedOrderMatchesCompare) {
  auto all = all_permutations(4);
  std::sort(all.begin(), all.end(),
            [](const Permutation& a, const Permutation& b) { return permutation_compare(a, b) < 0; });
  EXPECT_EQ(all.front(), Permutation::reversal(4));
  EXPECT_EQ(all.back(), Permutation::identity(4));
}

TEST(Act, Examples) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  EXPECT_EQ(act(Permutation::identity(2), a), a);
  EXPECT_EQ(act(perm({2, 1}), a), Matrix::from_rows({{3, 4}, {1, 2}}));
  EXPECT_THROW(act(Permutation::identity(3), a), DimensionError);
}

TEST(Act, EqualsPermutationMatrixProduct) {
  ref::Rng rng(3);
  for (const auto& s : all_permutations(4)) {
    const Matrix a = rng.matrix(4, 3);
    EXPECT_EQ(act(s, a), multiply(permutation_matrix(s), a));
  }
}

TEST(Act, LeftGroupActionExhaustive) {
  ref::Rng rng(17);
  for (std::size_t m = 1; m <= 5; ++m) {
    const auto all = all_permutations(m);
    const Matrix a = rng.matrix(m, 3);
    for (const auto& s : all) {
      EXPECT_EQ(act(Permutation::identity(m), a), a);
      for (const auto& t : all) {
        ASSERT_EQ(act(s * t, a), act(s, act(t, a)));
        ASSERT_EQ(permutation_matrix(s * t), multiply(permutation_matrix(s), permutation_matrix(t)));
      }
    }
  }
}

TEST(Act, InverseUndoes) {
  for (const auto& s : all_permutations(4)) {
    EXPECT_TRUE((s * s.inverse()).is_identity());
    EXPECT_TRUE((s.inverse() * s).is_identity());
  }
}

TEST(AssociatedSquare, MatchesTransposedPermutedIdentityProduct) {
  // A^sigma = P_sigma^T A with P_sigma = Phi(sigma) I_{m x n}.
  ref::Rng rng(23);
  const std::size_t m = 4, n = 2;
  const Matrix a = rng.matrix(m, n);
  for (const auto& s : all_permutations(m)) {
    const Matrix p = multiply(permutation_matrix(s), Matrix::identity(m, n));
    EXPECT_EQ(associated_square(s, a), multiply(transpose(p), a));
  }
}
