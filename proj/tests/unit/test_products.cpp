#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace semidirect;
using testing_helpers::expect_error;
using testing_helpers::M;
using testing_helpers::V;

namespace {

void expect_well_formed(const SemidirectAlgebra& p) {
  SCOPED_TRACE(p.total.name);
  EXPECT_EQ(p.total.dim, p.n() + p.m());
  EXPECT_TRUE(validate_algebra(p.total).ok());
  EXPECT_TRUE(a_block_closed(p));
  EXPECT_TRUE(u_block_is_ideal(p));
  EXPECT_EQ(quotient_by_module_block(p).mult, p.part_a.mult);
}

Algebra permuted(const Algebra& a, std::initializer_list<std::size_t> order) {
  Matrix p(a.dim, a.dim);
  std::size_t row = 0;
  for (std::size_t j : order) p(row++, j) = Rational(1);
  return change_basis(a, p);
}

BimoduleAction scalar_action(std::size_t m) {
  BimoduleAction act(1, m);
  for (std::size_t p = 0; p < m; ++p) {
    act.left(0, p, p) = Rational(1);
    act.right(p, 0, p) = Rational(1);
  }
  return act;
}

bool is_derivation_of(const DerivationFixture& f) {
  return is_derivation(f.derivation, f.algebra.total, regular_action(f.algebra.total));
}

// Strictly upper corner of T2 (basis E11, E12, E22) as a bimodule.
BimoduleAction strict_upper_corner() {
  BimoduleAction c(3, 1);
  c.left(0, 0, 0) = Rational(1);   // E11 E12 = E12
  c.right(0, 2, 0) = Rational(1);  // E12 E22 = E12
  return c;
}

}  // namespace

TEST(Semidirect, TrivialActionAndNullModule) {
  Algebra q = standard::scalars();
  SemidirectAlgebra p = semidirect::semidirect(q, {standard::null_algebra(1), zero_action(1, 1)});
  expect_well_formed(p);
  Algebra expect("e", 2);
  expect.mult(0, 0, 0) = Rational(1);
  EXPECT_EQ(p.total.mult, expect.mult);
}

TEST(Semidirect, UnitActionOnNullLineIsDualNumbers) {
  SemidirectAlgebra p = semidirect::semidirect(standard::scalars(), {standard::null_algebra(1), scalar_action(1)});
  expect_well_formed(p);
  EXPECT_EQ(p.total.mult, standard::dual_numbers().mult);
  EXPECT_EQ(unitization(standard::null_algebra(1)).total.mult, standard::dual_numbers().mult);
}

TEST(Semidirect, RegularOnScalarsIsQxQ) {
  Algebra q = standard::scalars();
  SemidirectAlgebra p = semidirect::semidirect(q, regular_module(q));
  expect_well_formed(p);
  // (a, x) -> (a, a + x) identifies it with Q x Q.
  Matrix phi = M({{1, 1}, {0, 1}});
  Algebra qq = standard::direct_sum(q, q);
  EXPECT_FALSE(transport_violation(phi, p.total, qq).has_value());
  EXPECT_TRUE(transport_violation(Matrix::identity(2), p.total, qq).has_value());
}

TEST(Semidirect, RejectsInvalidModule) {
  Algebra dual = standard::dual_numbers();
  BimoduleAction left_only(2, 2);
  left_only.left = regular_action(dual).left;
  expect_error(ErrorKind::ValidationFailed, [&] { semidirect::semidirect(dual, {dual, left_only}); });
}

TEST(DirectProduct, SpecExamples) {
  Algebra q = standard::scalars(), m2 = standard::matrix_algebra(2);
  SemidirectAlgebra qq = direct_product(q, q);
  expect_well_formed(qq);
  EXPECT_EQ(qq.total.mult, standard::direct_sum(q, q).mult);

  SemidirectAlgebra mq = direct_product(m2, q);
  expect_well_formed(mq);
  EXPECT_EQ(mq.total.dim, 5u);
  EXPECT_EQ(mq.total.mult, standard::direct_sum(m2, q).mult);
  EXPECT_EQ(mq.kind, ConstructionKind::Direct);

  SemidirectAlgebra a0 = direct_product(m2, standard::null_algebra(0));
  EXPECT_EQ(a0.total.mult, m2.mult);
}

TEST(ModuleExtension, SpecExamples) {
  Algebra q = standard::scalars();
  SemidirectAlgebra t = module_extension(q, regular_action(q));
  expect_well_formed(t);
  EXPECT_EQ(t.total.mult, standard::dual_numbers().mult);
  EXPECT_EQ(square_span(t.part_u.algebra).dim(), 0u);

  Algebra m2 = standard::matrix_algebra(2);
  EXPECT_EQ(module_extension(m2, zero_action(4, 0)).total.mult, m2.mult);

  Algebra qq = standard::direct_sum(q, q);
  BimoduleAction act(2, 1);
  act.left(0, 0, 0) = Rational(1);   // (a, b) x = a x
  act.right(0, 1, 0) = Rational(1);  // x (a, b) = x b
  SemidirectAlgebra tri = module_extension(qq, act);
  expect_well_formed(tri);
  EXPECT_EQ(tri.total.mult, permuted(standard::upper_triangular(2), {0, 2, 1}).mult);
}

TEST(Triangular, SpecExamples) {
  Algebra q = standard::scalars(), m2 = standard::matrix_algebra(2);
  CornerBimodule qqq(1, 1, 1);
  qqq.left(0, 0, 0) = Rational(1);
  qqq.right(0, 0, 0) = Rational(1);
  SemidirectAlgebra t = triangular(q, q, qqq);
  expect_well_formed(t);
  EXPECT_EQ(t.total.mult, permuted(standard::upper_triangular(2), {0, 2, 1}).mult);

  SemidirectAlgebra zero = triangular(m2, q, CornerBimodule(4, 1, 0));
  EXPECT_EQ(zero.total.mult, standard::direct_sum(m2, q).mult);

  CornerBimodule column(4, 1, 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) column.left(a * 2 + b, b, a) = Rational(1);  // E_ab e_b = e_a
  for (std::size_t p = 0; p < 2; ++p) column.right(p, 0, p) = Rational(1);
  SemidirectAlgebra big = triangular(m2, q, column);
  expect_well_formed(big);
  EXPECT_EQ(big.total.dim, 7u);
  EXPECT_EQ(square_span(big.part_u.algebra).dim(), 0u);
  EXPECT_EQ(big.kind, ConstructionKind::Triangular);
}

TEST(Triangular, RejectsBrokenCorner) {
  Algebra q = standard::scalars();
  CornerBimodule bad(1, 1, 1);
  bad.left(0, 0, 0) = Rational(2);  // e (e m) = 4m but (e e) m = 2m
  expect_error(ErrorKind::NotBimodule, [&] { triangular(q, q, bad); });
}

TEST(ThetaLau, SpecExamples) {
  Algebra q = standard::scalars();
  Character one{"one", {Rational(1)}};
  for (const Algebra& u : {standard::null_algebra(1), standard::matrix_algebra(2), standard::dual_numbers()}) {
    SemidirectAlgebra p = theta_lau(q, u, one);
    expect_well_formed(p);
    EXPECT_EQ(p.total.mult, unitization(u).total.mult);
  }

  Algebra qq = standard::direct_sum(q, q);
  Character first{"p1", {Rational(1), Rational(0)}};
  SemidirectAlgebra p = theta_lau(qq, standard::null_algebra(1), first);
  expect_well_formed(p);
  EXPECT_EQ(p.total.dim, 3u);
  EXPECT_EQ(annihilator_in_algebra(qq, p.part_u.action), Subspace::span(2, {V({0, 1})}));

  expect_error(ErrorKind::InvalidCharacter,
               [&] { theta_lau(qq, standard::null_algebra(1), {"zero", {Rational(0), Rational(0)}}); });
}

TEST(AlphaProduct, ZeroIsDirect) {
  for (const Algebra& a : {standard::scalars(), standard::matrix_algebra(2)}) {
    Matrix zero(a.dim, a.dim);
    SemidirectAlgebra p = alpha_product(a, a, zero);
    expect_well_formed(p);
    EXPECT_EQ(p.total.mult, direct_product(a, a).total.mult);
    EXPECT_EQ(alpha_iso(a, a, zero), Matrix::identity(2 * a.dim));
  }
}

TEST(AlphaProduct, IdentityTransportsDirectProduct) {
  for (const Algebra& a : {standard::scalars(), standard::matrix_algebra(2)}) {
    SCOPED_TRACE(a.name);
    Matrix id = Matrix::identity(a.dim);
    SemidirectAlgebra p = alpha_product(a, a, id);
    expect_well_formed(p);
    Matrix iso = alpha_iso(a, a, id);
    ASSERT_TRUE(inverse(iso));
    EXPECT_FALSE(transport_violation(iso, direct_product(a, a).total, p.total).has_value());
    // Entrywise: structure constants of the image basis equal those of A x|_alpha U.
    EXPECT_EQ(change_basis(p.total, iso).mult, direct_product(a, a).total.mult);
  }
  Algebra q = standard::scalars();
  SemidirectAlgebra p = alpha_product(q, q, M({{1}}));
  // (a, x)(b, y) = (ab, ay + xb + xy); the iso sends it to (ab, xy - ab) on Q x Q.
  EXPECT_EQ(p.total.mult, semidirect::semidirect(q, regular_module(q)).total.mult);
}

TEST(AlphaProduct, RejectsNonHomomorphism) {
  Algebra q = standard::scalars();
  expect_error(ErrorKind::NotHomomorphism, [&] { alpha_product(q, q, M({{2}})); });
  EXPECT_TRUE(homomorphism_violation(q, q, M({{2}})).has_value());
  expect_error(ErrorKind::ShapeMismatch, [&] { alpha_product(q, q, Matrix(2, 1)); });
}

TEST(FixtureExample33, SpecExamples) {
  DerivationFixture f = fixture_example_3_3(standard::scalars());
  EXPECT_EQ(f.algebra.total.dim, 3u);
  expect_well_formed(f.algebra);
  EXPECT_TRUE(is_derivation_of(f));
  BlockDecomposition b = split_blocks(f.derivation, f.algebra);
  EXPECT_FALSE(is_zero(flatten(b.tau1)));
  EXPECT_EQ(b.tau1, M({{0, 1}}));  // x -> (0, x)

  DerivationFixture empty = fixture_example_3_3(standard::null_algebra(0));
  EXPECT_EQ(empty.algebra.total.dim, 0u);
  EXPECT_TRUE(is_zero(flatten(empty.derivation)));

  DerivationFixture big = fixture_example_3_3(standard::matrix_algebra(2));
  EXPECT_EQ(big.algebra.total.dim, 12u);
  expect_well_formed(big.algebra);
  EXPECT_TRUE(is_derivation_of(big));
}

TEST(FixtureExample34, SpecExamples) {
  Algebra t2 = standard::upper_triangular(2);
  BimoduleAction c = strict_upper_corner();
  DerivationFixture zero = fixture_example_3_4(t2, c, Matrix(1, 3));
  EXPECT_TRUE(is_zero(flatten(zero.derivation)));
  EXPECT_TRUE(is_derivation_of(zero));

  DerivationFixture incl = fixture_example_3_4(t2, c, M({{0, 1, 0}}));
  expect_well_formed(incl.algebra);
  EXPECT_FALSE(is_zero(flatten(incl.derivation)));
  EXPECT_TRUE(is_derivation_of(incl));

  Algebra q = standard::scalars();
  expect_error(ErrorKind::GammaIdentityFailed,
               [&] { fixture_example_3_4(q, regular_action(q), M({{1}})); });
}
