// Frozen regression values. Each constant below was first produced by the
// brute-force matrix oracle in oracle/oracle.hpp, and the oracle is rerun here
// so a drift on either side shows up.

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracle/oracle.hpp"

using namespace semidirect;

namespace {

struct Frozen {
  std::size_t z1, n1, h1;
};

constexpr Frozen kM2{3, 3, 0};
constexpr Frozen kDual{1, 0, 1};
constexpr Frozen kQ{0, 0, 0};
constexpr Frozen kUpper2{2, 2, 0};
constexpr Frozen kQxQ{0, 0, 0};
constexpr Frozen kM2xQ{3, 3, 0};
constexpr Frozen kM2xDual{4, 3, 1};

// Block-diagonal embedding of two matrix algebras.
oracle::MatrixAlgebra block_sum(const oracle::MatrixAlgebra& a, const oracle::MatrixAlgebra& b) {
  std::size_t ka = a.size(), kb = b.size(), k = ka + kb;
  oracle::MatrixAlgebra out;
  for (const auto& m : a.basis) {
    oracle::Mat e = oracle::zeros(k);
    for (std::size_t r = 0; r < ka; ++r)
      for (std::size_t c = 0; c < ka; ++c) e[r][c] = m[r][c];
    out.basis.push_back(e);
  }
  for (const auto& m : b.basis) {
    oracle::Mat e = oracle::zeros(k);
    for (std::size_t r = 0; r < kb; ++r)
      for (std::size_t c = 0; c < kb; ++c) e[ka + r][ka + c] = m[r][c];
    out.basis.push_back(e);
  }
  return out;
}

// Structure constants read off the oracle's concrete matrices.
Algebra structure_constants(const oracle::MatrixAlgebra& a) {
  Algebra out("oracle", a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto c = a.coords(oracle::mul(a.basis[i], a.basis[j]));
      for (std::size_t k = 0; k < a.dim(); ++k)
        out.mult(i, j, k) = Rational(c[k].numerator(), c[k].denominator());
    }
  return out;
}

void expect_frozen(const oracle::MatrixAlgebra& o, const Algebra& lib, Frozen f) {
  EXPECT_EQ(oracle::derivation_dim(o), f.z1);
  EXPECT_EQ(oracle::inner_dim(o), f.n1);
  EXPECT_EQ(oracle::h1_dim(o), f.h1);
  EXPECT_EQ(derivation_space(lib).dim(), f.z1);
  EXPECT_EQ(inner_space(lib).dim(), f.n1);
  EXPECT_EQ(h1_dim(lib), f.h1);
}

}  // namespace

TEST(Oracle, StandardAlgebrasMatchConcreteMatrices) {
  EXPECT_EQ(structure_constants(oracle::m2()).mult, standard::matrix_algebra(2).mult);
  EXPECT_EQ(structure_constants(oracle::dual()).mult, standard::dual_numbers().mult);
  EXPECT_EQ(structure_constants(oracle::rationals()).mult, standard::scalars().mult);
  EXPECT_EQ(structure_constants(oracle::upper2()).mult, standard::upper_triangular(2).mult);
  EXPECT_EQ(structure_constants(oracle::diag2()).mult,
            standard::direct_sum(standard::scalars(), standard::scalars()).mult);
}

TEST(Oracle, H1Frozen) {
  expect_frozen(oracle::m2(), standard::matrix_algebra(2), kM2);
  expect_frozen(oracle::dual(), standard::dual_numbers(), kDual);
  expect_frozen(oracle::rationals(), standard::scalars(), kQ);
  expect_frozen(oracle::upper2(), standard::upper_triangular(2), kUpper2);
  expect_frozen(oracle::diag2(), standard::direct_sum(standard::scalars(), standard::scalars()), kQxQ);
}

TEST(Oracle, ProductsFrozen) {
  Algebra m2 = standard::matrix_algebra(2);
  expect_frozen(block_sum(oracle::m2(), oracle::rationals()), direct_product(m2, standard::scalars()).total, kM2xQ);
  expect_frozen(block_sum(oracle::m2(), oracle::dual()), direct_product(m2, standard::dual_numbers()).total,
                kM2xDual);
  // T(Q, Q), the unitization of the null line and theta-Lau(Q, null, 1) are all the dual numbers.
  Algebra q = standard::scalars();
  for (const SemidirectAlgebra& p : {module_extension(q, regular_action(q)), unitization(standard::null_algebra(1)),
                                     theta_lau(q, standard::null_algebra(1), {"one", {Rational(1)}})}) {
    EXPECT_EQ(p.total.mult, structure_constants(oracle::dual()).mult);
    EXPECT_EQ(h1_dim(p.total), kDual.h1);
  }
}
