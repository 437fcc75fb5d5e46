#include <gtest/gtest.h>

#include "realweyl/int_matrix.hpp"

using namespace realweyl;

TEST(IntMatrix, ProductAndTranspose) {
  IntMatrix a{{1, 2}, {3, 4}};
  IntMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a * (IntVec{1, 1}), (IntVec{3, 7}));
  EXPECT_TRUE((b * b).is_identity());
}

TEST(IntMatrix, KernelIsSaturated) {
  // x + 2y + 3z = 0 has kernel spanned by (-2,1,0), (-3,0,1); any basis has
  // unit-determinant gcd of maximal minors.
  IntMatrix a{{1, 2, 3}};
  auto k = integer_kernel(a);
  ASSERT_EQ(k.cols(), 2u);
  for (std::size_t j = 0; j < k.cols(); ++j) EXPECT_TRUE(is_zero(a * k.col(j)));
  // (-1,-1,1) = (-2,1,0)... lies in the kernel and must have integer coordinates.
  auto c = solve_integer(k, IntVec{1, 1, -1});
  EXPECT_TRUE(c.has_value());
}

TEST(IntMatrix, KernelOfEvenMatrix) {
  IntMatrix a{{2, 0}, {0, 0}};
  auto k = integer_kernel(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_EQ(k.col(0)[0], 0);
  EXPECT_EQ(std::abs(k.col(0)[1]), 1);
}

TEST(IntMatrix, RationalInverseAndDeterminant) {
  IntMatrix c{{2, -1}, {-1, 2}};
  auto inv = rational_inverse(c);
  EXPECT_EQ(inv[0][0], Rational(2, 3));
  EXPECT_EQ(inv[0][1], Rational(1, 3));
  EXPECT_EQ(abs_determinant(c), 3);
  EXPECT_EQ(rational_rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
}

TEST(IntMatrix, SolveIntegerRejectsFractions) {
  IntMatrix b{{2}, {0}};
  EXPECT_FALSE(solve_integer(b, IntVec{1, 0}).has_value());
  EXPECT_EQ(*solve_integer(b, IntVec{4, 0}), (IntVec{2}));
  EXPECT_FALSE(solve_integer(b, IntVec{2, 1}).has_value());
}

TEST(F2Span, ReduceIsCanonical) {
  F2Span s(4);
  EXPECT_TRUE(s.insert(0b0011));
  EXPECT_TRUE(s.insert(0b0110));
  EXPECT_FALSE(s.insert(0b0101));
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_EQ(s.reduce(0b0011), 0u);
  EXPECT_EQ(s.reduce(0b1000), s.reduce(0b1011));
  EXPECT_EQ(s.free_coordinates().size(), 2u);
  EXPECT_EQ(to_f2(IntVec{3, -1, 2, 0}), 0b0011u);
}
