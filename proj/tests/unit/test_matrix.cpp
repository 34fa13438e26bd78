#include <gtest/gtest.h>

#include <random>

#include "coulomb/matrix.hpp"

using namespace coulomb;

namespace {

RatMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
      m(i, j).canonicalize();
    }
  return m;
}

// Laplace expansion: independent of the elimination used by the library.
Rational laplace_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    total += (j % 2 == 0 ? 1 : -1) * m(0, j) * laplace_det(minor);
  }
  return total;
}

Rational eval(const std::vector<Rational>& poly, const Rational& t) {
  Rational v = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * t + *it;
  return v;
}

}  // namespace

TEST(RatMatrix, DeterminantAndInverse) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto a = random_matrix(n, rng);
    auto b = random_matrix(n, rng);
    EXPECT_EQ(a.determinant(), laplace_det(a));
    EXPECT_EQ((a * b).determinant(), a.determinant() * b.determinant());
    if (a.determinant() != 0) {
      EXPECT_EQ(a * a.inverse(), RatMatrix::identity(n));
      EXPECT_EQ(a.rank(), n);
    } else {
      EXPECT_THROW(a.inverse(), std::domain_error);
      EXPECT_LT(a.rank(), n);
    }
  }
}

TEST(RatMatrix, CharPolyAgreesWithDeterminant) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto a = random_matrix(n, rng);
    auto c = a.char_poly();
    ASSERT_EQ(c.size(), n + 1);
    EXPECT_EQ(c[n], 1);
    for (int t = -2; t <= 2; ++t) {
      const Rational tq(t);
      EXPECT_EQ(eval(c, tq), laplace_det(tq * RatMatrix::identity(n) - a));
    }
    EXPECT_EQ(c[n - 1], -a.trace());
  }
}

TEST(RatMatrix, Solve) {
  RatMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  RatVector x;
  std::size_t rank = 0;
  ASSERT_TRUE(solve_linear(a, {6, 12, 2}, x, &rank));
  EXPECT_EQ(rank, 2u);
  EXPECT_EQ(a * x, (RatVector{6, 12, 2}));
  EXPECT_FALSE(solve_linear(a, {1, 1, 1}, x));

  auto k = kernel_vector(a);
  ASSERT_EQ(k.size(), 3u);
  EXPECT_EQ(a * k, (RatVector{0, 0, 0}));
  for (const auto& c : k) EXPECT_TRUE(is_integer(c));
  EXPECT_TRUE(kernel_vector(RatMatrix::identity(3)).empty());
}

TEST(RatMatrix, Basics) {
  RatMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a.transposed(), (RatMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a.pow(0), RatMatrix::identity(2));
  EXPECT_EQ(a.pow(2), a * a);
  EXPECT_EQ(RatMatrix::from_columns({{1, 3}, {2, 4}}), a);
  EXPECT_EQ(a.column(1), (RatVector{2, 4}));
  EXPECT_EQ(rank_of_columns({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(dot({1, 2}, {3, 4}), 11);
  EXPECT_TRUE((a - a).is_zero());
}
