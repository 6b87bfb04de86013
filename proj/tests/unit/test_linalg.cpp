#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace semidirect;
using testing_helpers::M;
using testing_helpers::V;

TEST(Rational, LowestTermsAndCanonicalZero) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_TRUE(Rational(6, 3).is_integer());
}

TEST(Rational, ParseIsExact) {
  Rational third = Rational::parse("1/3");
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "1.5", "+1", "1/-2", "a", "1/02"}) {
    SCOPED_TRACE(bad);
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
  }
}

TEST(Rational, ArithmeticAndOrder) {
  Rational a(1, 2), b(1, 3);
  EXPECT_EQ(a + b, Rational(5, 6));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 6));
  EXPECT_EQ(a / b, Rational(3, 2));
  EXPECT_LT(b, a);
  Rational c = a;
  c.add_product(a, b);
  EXPECT_EQ(c, Rational(2, 3));
  c.sub_product(a, b);
  EXPECT_EQ(c, a);
}

TEST(Rref, SpecExamples) {
  EXPECT_EQ(rref(M({{2, 4}, {1, 2}})), M({{1, 2}}));
  EXPECT_EQ(rref(Matrix::identity(3)), Matrix::identity(3));
  EXPECT_EQ(rref(M({{1, 2}, {3, 4}})), Matrix::identity(2));
}

TEST(Rref, ThirdsStayExact) {
  Matrix m = M({{3, 1}, {1, 3}});
  Matrix inv = *inverse(m);
  EXPECT_EQ(inv, M({{Rational(3, 8), Rational(-1, 8)}, {Rational(-1, 8), Rational(3, 8)}}));
  EXPECT_EQ(m * inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(M({{1, 2}, {2, 4}})).has_value());
}

TEST(Kernel, SpecExamples) {
  EXPECT_EQ(kernel(Matrix(2, 3)), Subspace::full(3));
  EXPECT_EQ(kernel(Matrix::identity(4)).dim(), 0u);
  EXPECT_EQ(kernel(M({{1, 1}})), Subspace::span(2, {V({1, -1})}));
}

TEST(Subspaces, SpecExamples) {
  Vector e1 = V({1, 0, 0}), e2 = V({0, 1, 0}), e3 = V({0, 0, 1});
  EXPECT_EQ(sum(Subspace::span(2, {V({1, 0})}), Subspace::span(2, {V({0, 1})})), Subspace::full(2));
  EXPECT_EQ(intersect(Subspace::span(3, {e1, e2}), Subspace::span(3, {e2, e3})), Subspace::span(3, {e2}));
  EXPECT_EQ(quotient_dim(Subspace::full(3), Subspace::span(3, {e1})), 2u);
}

TEST(Subspaces, QuotientNeedsContainment) {
  try {
    quotient_dim(Subspace::span(2, {V({1, 0})}), Subspace::span(2, {V({0, 1})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASubspace);
  }
}

TEST(Subspaces, CanonicalBasisMakesEqualityBitwise) {
  Subspace a = Subspace::span(3, {V({1, 2, 3}), V({0, 1, 1})});
  Subspace b = Subspace::span(3, {V({1, 3, 4}), V({2, 5, 7}), V({0, 0, 0})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.basis(), M({{1, 0, 1}, {0, 1, 1}}));
  EXPECT_TRUE(a.contains(V({2, 3, 5})));
  EXPECT_FALSE(a.contains(V({0, 0, 1})));
  EXPECT_TRUE(is_zero(a.reduce(V({2, 3, 5}))));
}

TEST(Subspaces, ImagesAndSolves) {
  Matrix m = M({{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(map_image(Subspace::full(2), m), row_space(m));
  EXPECT_EQ(left_kernel(M({{1, 1}, {2, 2}})), Subspace::span(2, {V({2, -1})}));
  auto x = solve_left(m, V({2, 3, 5}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x * m, V({2, 3, 5}));
  EXPECT_FALSE(solve_left(m, V({0, 0, 1})).has_value());
  EXPECT_EQ(product(Subspace::full(1), Subspace::zero(2)), Subspace::span(3, {V({1, 0, 0})}));
}

TEST(LinearSystem, StreamsToTheKernel) {
  LinearSystem sys(3);
  sys.add_equation(V({1, 1, 0}));
  sys.add_equation(V({2, 2, 0}));
  sys.add_equation(V({0, 1, -1}));
  EXPECT_EQ(sys.rank(), 2u);
  EXPECT_EQ(sys.solutions(), kernel(M({{1, 1, 0}, {0, 1, -1}})));
  try {
    sys.add_equation(V({1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(LinearAlgebraProperties, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m = testing_helpers::random_matrix(rng, r, c, 3);
    std::size_t rk = rank(m);
    EXPECT_EQ(kernel(m).dim() + image(m).dim(), c);
    EXPECT_EQ(image(m).dim(), rk);
    EXPECT_EQ(left_kernel(m).dim() + rk, r);
    Matrix rr = rref(m);
    EXPECT_EQ(rref(rr), rr);
    EXPECT_EQ(rr.rows(), rk);
    std::size_t last = 0;
    for (std::size_t i = 0; i < rr.rows(); ++i) {
      std::size_t p = 0;
      while (rr(i, p).is_zero()) ++p;
      EXPECT_EQ(rr(i, p), Rational(1));
      if (i) EXPECT_GT(p, last);
      last = p;
    }
  }
}

TEST(LinearAlgebraProperties, ModularLawAndLatticeLaws) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    std::size_t d = 1 + rng() % 5;
    Subspace a = testing_helpers::random_subspace(rng, d, rng() % 4);
    Subspace b = testing_helpers::random_subspace(rng, d, rng() % 4);
    Subspace c = testing_helpers::random_subspace(rng, d, rng() % 4);
    EXPECT_EQ(sum(a, b).dim() + intersect(a, b).dim(), a.dim() + b.dim());
    EXPECT_EQ(sum(a, b), sum(b, a));
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(sum(sum(a, b), c), sum(a, sum(b, c)));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    Subspace ac = intersect(a, c);
    EXPECT_EQ(intersect(sum(ac, b), c), sum(ac, intersect(b, c)));
    EXPECT_TRUE(sum(a, b).contains(a));
    EXPECT_TRUE(a.contains(intersect(a, b)));
  }
}
