#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wolfkit/errors.hpp"
#include "wolfkit/matrix.hpp"
#include "wolfkit/polynomial.hpp"
#include "wolfkit/quadratic_space.hpp"

using namespace wolfkit;
using wolfkit::testing::random_invertible;
using wolfkit::testing::random_map;
using wolfkit::testing::random_matrix;
using wolfkit::testing::random_point;
using wolfkit::testing::random_symmetric;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("4/6")), "2/3");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(parse_rational("+3/9"), Rational(1, 3));
  EXPECT_THROW(parse_rational("1/0"), UsageError);
  EXPECT_THROW(parse_rational("1/-2"), UsageError);
  EXPECT_THROW(parse_rational("x"), UsageError);
  EXPECT_THROW(parse_rational(""), UsageError);
  EXPECT_THROW(parse_rational("0.5"), UsageError);
}

TEST(SolveLinear, Identity) {
  auto s = solve_linear(Matrix::identity(2), Matrix::column({1, 2}));
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(*s.particular, Matrix::column({1, 2}));
  EXPECT_EQ(s.kernel.cols(), 0u);
}

TEST(SolveLinear, RankOne) {
  Matrix a{{1, 1}, {2, 2}};
  Matrix b = Matrix::column({1, 2});
  auto s = solve_linear(a, b);
  ASSERT_TRUE(s.particular);
  EXPECT_EQ(a * *s.particular, b);
  ASSERT_EQ(s.kernel.cols(), 1u);
  EXPECT_TRUE(same_span(s.kernel, Matrix::column({1, -1})));
  EXPECT_TRUE((a * s.kernel).is_zero());
}

TEST(SolveLinear, Inconsistent) {
  Matrix a{{1, 1}, {2, 2}};
  EXPECT_FALSE(solve_linear(a, Matrix::column({1, 3})).particular);
}

TEST(SolveLinear, DimensionMismatch) {
  EXPECT_THROW(solve_linear(Matrix::identity(2), Matrix::column({1, 2, 3})), UsageError);
}

TEST(SolveLinear, RandomInvertibleMultiplyBack) {
  RationalSampler s(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_invertible(s, 5);
    Matrix b = random_point(s, 5);
    auto sol = solve_linear(a, b);
    ASSERT_TRUE(sol.particular);
    EXPECT_EQ(a * *sol.particular, b);
    EXPECT_EQ(sol.kernel.cols(), 0u);
  }
}

TEST(SolveLinear, PropertySolutionAndKernel) {
  RationalSampler s(12);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + s.next_index(5), c = 1 + s.next_index(5);
    // low-rank products exercise nontrivial kernels
    Matrix a = random_matrix(s, r, 2) * random_matrix(s, 2, c);
    Matrix x0 = random_point(s, c);
    Matrix b = a * x0;
    auto sol = solve_linear(a, b);
    ASSERT_TRUE(sol.particular);
    EXPECT_EQ(a * *sol.particular, b);
    EXPECT_TRUE((a * sol.kernel).is_zero());
    EXPECT_EQ(sol.kernel.cols() + rank(a), c);
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(Matrix{{1, 0}, {0, -1}}), (Inertia{1, 1, 0}));
  EXPECT_EQ(inertia(Matrix(3, 3)), (Inertia{0, 0, 3}));
  Matrix split(6, 6);
  split.set_block(0, 3, Matrix::identity(3));
  split.set_block(3, 0, Matrix::identity(3));
  EXPECT_EQ(inertia(split), (Inertia{3, 3, 0}));
}

TEST(Inertia, ZeroDiagonalNeedsSubstitution) {
  EXPECT_EQ(inertia(Matrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
  EXPECT_EQ(inertia(Matrix{{0, 0, 2}, {0, 0, 0}, {2, 0, 0}}), (Inertia{1, 1, 1}));
}

TEST(Inertia, RejectsNonSymmetric) {
  EXPECT_THROW(inertia(Matrix{{0, 1}, {0, 0}}), UsageError);
}

TEST(Inertia, CongruenceInvariantAndNullity) {
  RationalSampler s(13);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + s.next_index(4);
    // rank-deficient symmetric: L D L^T with some zero entries in D
    Matrix l = random_matrix(s, n, n);
    Matrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = s.next_index(3) == 0 ? Rational(0) : s.next();
    Matrix m = l * d * l.transpose();
    Inertia base = inertia(m);
    EXPECT_EQ(base.null, n - rank(m));
    EXPECT_EQ(base.plus + base.minus + base.null, n);
    for (int k = 0; k < 50; ++k) {
      Matrix t = random_invertible(s, n);
      EXPECT_EQ(inertia(t.transpose() * m * t), base);
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_symmetric(s, 4);
    EXPECT_EQ(inertia(m).null, 4 - rank(m));
  }
}

TEST(QuadraticSpace, ValidatesForm) {
  auto q = QuadraticSpace::standard(4, 1);
  EXPECT_EQ(q.signature(), (Inertia{3, 1, 0}));
  EXPECT_THROW(QuadraticSpace(Matrix{{1, 0}, {0, 0}}), UsageError);
  EXPECT_THROW(QuadraticSpace(Matrix{{1, 1}, {0, 1}}), UsageError);
  EXPECT_THROW(QuadraticSpace::standard(3, 2), UsageError);
  EXPECT_EQ(q.inner(Matrix::column({1, 0, 0, 1}), Matrix::column({1, 0, 0, 1})), 0);
}

TEST(Compose, IdentityOnLeft) {
  RationalSampler s(14);
  PolynomialMap g = random_map(s, 3, 2, 2);
  EXPECT_EQ(compose(PolynomialMap::identity(2), g), g);
}

TEST(Compose, Binomial) {
  Polynomial x = Polynomial::variable(1, 0);
  PolynomialMap f(1, {x * x});
  PolynomialMap g(1, {x + Polynomial::constant(1, 1)});
  Polynomial expect(1);
  expect.add_term({2}, 1);
  expect.add_term({1}, 2);
  expect.add_term({0}, 1);
  EXPECT_EQ(compose(f, g)[0], expect);
  EXPECT_EQ(to_string(compose(f, g)[0]), "x1^2 + 2*x1 + 1");
}

TEST(Compose, ArityMismatch) {
  EXPECT_THROW(compose(PolynomialMap::identity(2), PolynomialMap::identity(3)), UsageError);
}

TEST(Compose, PointEvaluationOracle) {
  RationalSampler s(15);
  PolynomialMap f = random_map(s, 3, 3, 2);
  PolynomialMap g = random_map(s, 3, 3, 2);
  PolynomialMap fg = compose(f, g);
  for (int k = 0; k < 20; ++k) {
    Matrix x = random_point(s, 3);
    EXPECT_EQ(fg.evaluate(x), f.evaluate(g.evaluate(x)));
  }
}

TEST(Compose, Associative) {
  RationalSampler s(16);
  for (int trial = 0; trial < 3; ++trial) {
    PolynomialMap f = random_map(s, 2, 2, 2);
    PolynomialMap g = random_map(s, 3, 2, 2);
    PolynomialMap h = random_map(s, 2, 3, 1);
    PolynomialMap left = compose(compose(f, g), h);
    PolynomialMap right = compose(f, compose(g, h));
    EXPECT_EQ(left, right);
    for (int k = 0; k < 20; ++k) {
      Matrix x = random_point(s, 2);
      EXPECT_EQ(left.evaluate(x), right.evaluate(x));
    }
  }
}

TEST(PolyIdentityZero, Examples) {
  EXPECT_TRUE(poly_identity_zero(PolynomialMap(2, {Polynomial(2), Polynomial(2)})));
  Polynomial x = Polynomial::variable(1, 0);
  EXPECT_TRUE(poly_identity_zero(PolynomialMap(1, {x - x})));
  EXPECT_FALSE(poly_identity_zero(PolynomialMap(1, {x})));
  auto id = PolynomialMap::identity(3);
  EXPECT_TRUE(poly_identity_zero(id - id));
}

TEST(Polynomial, GradedLexOrderIsCanonical) {
  Polynomial p(2);
  p.add_term({0, 1}, 1);
  p.add_term({1, 0}, 1);
  p.add_term({0, 0}, 3);
  p.add_term({1, 1}, -2);
  EXPECT_EQ(to_string(p), "-2*x1*x2 + x1 + x2 + 3");
  EXPECT_EQ(p.degree(), 2);
  p.add_term({1, 1}, 2);
  EXPECT_EQ(p.degree(), 1);
  EXPECT_THROW(p.add_term({1}, 1), UsageError);
}
