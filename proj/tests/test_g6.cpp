#include <gtest/gtest.h>

#include <random>

#include "niggli/error.hpp"
#include "niggli/g6.hpp"
#include "support/oracles.hpp"

using namespace niggli;

TEST(CellToG6, CubicCell) {
  const G6Vector g = cell_to_g6({2, 2, 2, 90, 90, 90});
  EXPECT_TRUE(approx_equal(g, {4, 4, 4, 0, 0, 0}, 1e-14));
}

TEST(CellToG6, MatchesDotProducts) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> e(1, 20), a(40, 140);
  for (int i = 0; i < 200; ++i) {
    CellParams c{e(rng), e(rng), e(rng), a(rng), a(rng), a(rng)};
    try {
      validate(c);
    } catch (const InvalidCell&) {
      continue;
    }
    EXPECT_TRUE(approx_equal(cell_to_g6(c),
                             oracle::g6_of_cell(c.a, c.b, c.c, c.alpha, c.beta, c.gamma), 1e-12));
  }
}

TEST(CellToG6, RoundTrip) {
  const CellParams c{3.5, 4.25, 7.0, 81.0, 97.5, 103.0};
  const CellParams back = g6_to_cell(cell_to_g6(c));
  EXPECT_NEAR(back.a, c.a, 1e-12);
  EXPECT_NEAR(back.b, c.b, 1e-12);
  EXPECT_NEAR(back.c, c.c, 1e-12);
  EXPECT_NEAR(back.alpha, c.alpha, 1e-10);
  EXPECT_NEAR(back.beta, c.beta, 1e-10);
  EXPECT_NEAR(back.gamma, c.gamma, 1e-10);
}

TEST(CellToG6, RejectsInvalidCells) {
  EXPECT_THROW(cell_to_g6({-1, 1, 1, 90, 90, 90}), InvalidCell);
  EXPECT_THROW(cell_to_g6({1, 1, 1, 0, 90, 90}), InvalidCell);
  EXPECT_THROW(cell_to_g6({1, 1, 1, 150, 150, 150}), InvalidCell);  // sum > 360
  EXPECT_THROW(cell_to_g6({1, 1, 1, 20, 30, 100}), InvalidCell);    // gamma > alpha + beta
  EXPECT_THROW(g6_to_cell({1, 1, 1, 3, 0, 0}), NotPositiveDefinite);
}

TEST(MetricDeterminant, EqualsSquaredVolume) {
  const G6Vector g = cell_to_g6({2, 3, 5, 90, 90, 90});
  EXPECT_NEAR(metric_determinant(g), 900.0, 1e-9);
  EXPECT_TRUE(is_positive_definite(g));
  EXPECT_FALSE(is_positive_definite({1, 1, 1, 2, 2, 2}));
}

TEST(G6Matrix, ParsesOverlineAndFractions) {
  const G6Matrix m = G6Matrix::parse("1001̅0 0/010000/001000/000100/000010/000001");
  EXPECT_EQ(m(0, 3), Rational(-1));
  const G6Matrix p = G6Matrix::parse("(1/2)(-1/2)0000/(-1/2)(1/2)0000/001000/000100/000010/000001");
  EXPECT_EQ(p(0, 1), Rational(-1, 2));
  EXPECT_EQ(p * p, p);
  EXPECT_EQ(G6Matrix::parse(m.to_string()), m);
  EXPECT_EQ(G6Matrix::parse("01-100 0/010000/001000/000100/000010/000001"),
            G6Matrix::parse("011̅000/010000/001000/000100/000010/000001"));
}

TEST(G6Matrix, RejectsMalformedText) {
  EXPECT_THROW(G6Matrix::parse("10000/010000/001000/000100/000010/000001"), ParseError);
  EXPECT_THROW(G6Matrix::parse("100000/010000"), ParseError);
  EXPECT_THROW(G6Matrix::parse("1x0000/010000/001000/000100/000010/000001"), ParseError);
  EXPECT_THROW(G6Matrix::parse("(1/0000/010000/001000/000100/000010/000001"), ParseError);
}

TEST(G6MatrixFromBasis, MatchesMetricTransform) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto t = oracle::random_unimodular(rng);
    const G6Matrix n = g6_matrix_from_basis(BasisTransform(t));
    EXPECT_LT((n.to_numeric() - oracle::g6_matrix(t)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(n, g6_matrix_from_basis(-BasisTransform(t)));
    EXPECT_EQ(n, G6Matrix::from_integers(g6_integer_matrix_from_basis(BasisTransform(t))));
  }
}

TEST(G6MatrixFromBasis, ComposesLikeTheBasis) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const BasisTransform a(oracle::random_unimodular(rng));
    const BasisTransform b(oracle::random_unimodular(rng));
    EXPECT_EQ(g6_matrix_from_basis(a * b), g6_matrix_from_basis(a) * g6_matrix_from_basis(b));
    EXPECT_EQ((a * b).determinant(), 1);
  }
}

TEST(G6Vector, Parse) {
  EXPECT_EQ(G6Vector::parse("1, 2 3,4 5 6"), G6Vector(1, 2, 3, 4, 5, 6));
  EXPECT_THROW(G6Vector::parse("1 2 3"), ParseError);
  EXPECT_THROW(G6Vector::parse("1 2 3 4 5 x"), ParseError);
}
