#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace semidirect;
using testing_helpers::M;
using testing_helpers::V;

namespace {

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

ModuleAlgebra trivial_module(const Algebra& a, const Algebra& u) { return {u, zero_action(a.dim, u.dim)}; }

}  // namespace

TEST(ValidateAlgebra, SpecExamples) {
  EXPECT_TRUE(validate_algebra(standard::scalars()).ok());
  EXPECT_TRUE(validate_algebra(standard::scaled_line(Rational(2))).ok());

  Algebra bad("bad", 2);
  bad.mult(0, 0, 1) = Rational(1);  // e1 e1 = e2
  bad.mult(0, 1, 0) = Rational(1);  // e1 e2 = e1
  ValidationReport r = validate_algebra(bad);
  ASSERT_FALSE(r.ok());
  auto it = std::find_if(r.violations.begin(), r.violations.end(),
                         [](const Violation& v) { return v.indices == std::vector<std::size_t>{0, 0, 0}; });
  ASSERT_NE(it, r.violations.end());
  EXPECT_EQ(it->axiom, "associativity");
  EXPECT_EQ(it->lhs, V({0, 0}));  // (e1 e1) e1 = e2 e1 = 0
  EXPECT_EQ(it->rhs, V({1, 0}));  // e1 (e1 e1) = e1 e2 = e1
  try {
    require_valid(r, "bad");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ValidationFailed);
  }
}

TEST(ValidateAlgebra, StandardFamiliesAreValid) {
  for (const Algebra& a :
       {standard::matrix_algebra(2), standard::matrix_algebra(3), standard::dual_numbers(), standard::null_algebra(3),
        standard::upper_triangular(2), standard::upper_triangular(3), standard::cyclic_group_algebra(3),
        standard::direct_sum(standard::scalars(), standard::dual_numbers()), standard::null_algebra(0)}) {
    SCOPED_TRACE(a.name);
    EXPECT_TRUE(validate_algebra(a).ok());
  }
}

TEST(ValidateModule, SpecExamples) {
  Algebra m2 = standard::matrix_algebra(2), dual = standard::dual_numbers();
  EXPECT_TRUE(validate_module(m2, trivial_module(m2, dual)).ok());

  Character first{"p1", {Rational(1), Rational(0)}};
  Algebra qq = standard::direct_sum(standard::scalars(), standard::scalars());
  ModuleAlgebra lau{dual, character_action(first, dual.dim)};
  EXPECT_TRUE(validate_module(qq, lau).ok());

  BimoduleAction left_only(dual.dim, dual.dim);
  left_only.left = regular_action(dual).left;
  ValidationReport r = validate_module(dual, {dual, left_only});
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_axiom(r, "(x.a)y=x(a.y)"));
}

TEST(ValidateModule, BrokenBimodule) {
  Algebra dual = standard::dual_numbers();
  BimoduleAction act(2, 1);
  act.left(1, 0, 0) = Rational(1);  // t acts as 1, but t^2 = 0
  EXPECT_TRUE(has_axiom(validate_bimodule(dual, act), "(ab)x=a(bx)"));
}

TEST(Annihilators, SpecExamples) {
  Algebra m2 = standard::matrix_algebra(2), q = standard::scalars();
  Algebra qq = standard::direct_sum(q, q);
  EXPECT_EQ(annihilator_in_algebra(m2, zero_action(4, 2)), Subspace::full(4));

  Character first{"p1", {Rational(1), Rational(0)}};
  Subspace ann = annihilator_in_algebra(qq, character_action(first, 1));
  EXPECT_EQ(ann, Subspace::span(2, {V({0, 1})}));  // ker theta

  EXPECT_EQ(annihilator_in_algebra(m2, regular_action(m2)).dim(), 0u);
  EXPECT_EQ(annihilator_in_module(trivial_module(q, standard::null_algebra(2))), Subspace::full(2));
  EXPECT_EQ(annihilator_in_module(regular_module(m2)).dim(), 0u);
}

TEST(Annihilators, RelativeAnnihilator) {
  Algebra qq = standard::direct_sum(standard::scalars(), standard::scalars());
  BimoduleAction act = regular_action(qq);
  Subspace e1 = Subspace::span(2, {V({1, 0})});
  EXPECT_EQ(relative_annihilator(e1, act), e1);  // a U in span{e1} iff a in span{e1}
  EXPECT_EQ(relative_annihilator(Subspace::zero(2), act), annihilator_in_algebra(qq, act));
  EXPECT_EQ(relative_annihilator(Subspace::full(2), act), Subspace::full(2));
  Algebra m2 = standard::matrix_algebra(2);
  try {
    relative_annihilator(Subspace::span(4, {V({0, 1, 0, 0})}), regular_action(m2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSubmodule);
  }
}

TEST(Center, SpecExamples) {
  EXPECT_EQ(center(standard::dual_numbers()), Subspace::full(2));
  EXPECT_EQ(center(standard::matrix_algebra(2)), Subspace::span(4, {V({1, 0, 0, 1})}));
  EXPECT_EQ(center(standard::upper_triangular(2)), Subspace::span(3, {V({1, 0, 1})}));
}

TEST(Characters, SpecExamples) {
  Algebra q = standard::scalars();
  EXPECT_TRUE(validate_character(q, {"id", {Rational(1)}}));
  Algebra qq = standard::direct_sum(q, q);
  EXPECT_TRUE(validate_character(qq, {"p1", {Rational(1), Rational(0)}}));
  EXPECT_FALSE(validate_character(qq, {"zero", {Rational(0), Rational(0)}}));
  EXPECT_FALSE(validate_character(qq, {"sum", {Rational(1), Rational(1)}}));
  EXPECT_FALSE(validate_character(q, {"two", {Rational(2)}}));
}

TEST(Predicates, IdealsAndSpans) {
  Algebra t2 = standard::upper_triangular(2);
  EXPECT_TRUE(is_ideal(t2, Subspace::span(3, {V({0, 1, 0})})));
  EXPECT_FALSE(is_ideal(t2, Subspace::span(3, {V({1, 0, 0})})));
  EXPECT_FALSE(is_commutative(t2));
  EXPECT_TRUE(is_commutative(standard::cyclic_group_algebra(3)));
  EXPECT_EQ(square_span(standard::dual_numbers()), Subspace::full(2));
  EXPECT_EQ(square_span(standard::null_algebra(2)).dim(), 0u);
  EXPECT_TRUE(is_symmetric(regular_action(standard::dual_numbers())));
  EXPECT_FALSE(is_symmetric(regular_action(t2)));
}

TEST(ChangeOfBasis, PreservesValidityAndInvariants) {
  Algebra m2 = standard::matrix_algebra(2);
  Matrix p = M({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 1}, {1, 0, 0, 1}});
  ASSERT_TRUE(inverse(p));
  Algebra b = change_basis(m2, p);
  EXPECT_TRUE(validate_algebra(b).ok());
  EXPECT_NE(b.mult, m2.mult);
  EXPECT_EQ(center(b).dim(), 1u);
  EXPECT_EQ(change_basis(b, *inverse(p)).mult, m2.mult);

  Character first{"p1", {Rational(1), Rational(0)}};
  Algebra qq = standard::direct_sum(standard::scalars(), standard::scalars());
  Matrix pq = M({{1, 1}, {0, 1}});
  EXPECT_TRUE(validate_character(change_basis(qq, pq), change_basis(first, pq)));
}
