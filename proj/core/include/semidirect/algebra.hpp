#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semidirect/linalg.hpp"
#include "semidirect/tensor.hpp"

namespace semidirect {

/// Finite-dimensional associative algebra over Q given by structure
/// constants: e_i e_j = sum_k mult(i, j, k) e_k.
struct Algebra {
  std::string name;
  std::size_t dim = 0;
  Tensor3 mult;

  Algebra() = default;
  Algebra(std::string name, std::size_t dim) : name(std::move(name)), dim(dim), mult(dim, dim, dim) {}

  Vector multiply(const Vector& a, const Vector& b) const { return mult.contract(a, b); }
  Vector basis_product(std::size_t i, std::size_t j) const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.dim == b.dim && a.mult == b.mult; }
};

/// Left and right actions of an n-dimensional algebra on an m-dimensional
/// space: e_i u_p = sum_q left(i, p, q) u_q and u_p e_i = sum_q right(p, i, q) u_q.
struct BimoduleAction {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  Tensor3 left;
  Tensor3 right;

  BimoduleAction() = default;
  BimoduleAction(std::size_t n, std::size_t m) : algebra_dim(n), module_dim(m), left(n, m, m), right(m, n, m) {}

  Vector act_left(const Vector& a, const Vector& x) const { return left.contract(a, x); }
  Vector act_right(const Vector& x, const Vector& a) const { return right.contract(x, a); }

  friend bool operator==(const BimoduleAction&, const BimoduleAction&) = default;
};

/// An algebra U that is also an A-bimodule with compatible actions.
struct ModuleAlgebra {
  Algebra algebra;
  BimoduleAction action;

  std::size_t dim() const { return algebra.dim; }
};

/// Nonzero multiplicative functional on an algebra.
struct Character {
  std::string name;
  Vector values;

  Rational operator()(const Vector& a) const;
};

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_items = 3) const;
};

/// Throws ValidationFailed with the first witnesses when the report is not clean.
void require_valid(const ValidationReport& report, const std::string& what);

ValidationReport validate_algebra(const Algebra& a);
/// The three bimodule axioms (ab)x = a(bx), x(ab) = (xa)b, (ax)b = a(xb).
ValidationReport validate_bimodule(const Algebra& a, const BimoduleAction& action);
/// Bimodule axioms, associativity of U, and the compatibility triple
/// (a.x)y = a.(xy), (xy).a = x(y.a), (x.a)y = x(a.y).
ValidationReport validate_module(const Algebra& a, const ModuleAlgebra& u);
bool validate_character(const Algebra& a, const Character& t);

BimoduleAction regular_action(const Algebra& a);
BimoduleAction zero_action(std::size_t algebra_dim, std::size_t module_dim);
/// a x = x a = theta(a) x.
BimoduleAction character_action(const Character& theta, std::size_t module_dim);
ModuleAlgebra regular_module(const Algebra& a);

bool is_commutative(const Algebra& a);
/// a x = x a for all basis pairs.
bool is_symmetric(const BimoduleAction& action);

/// ann_A U = {a : aU = Ua = 0}.
Subspace annihilator_in_algebra(const Algebra& a, const BimoduleAction& action);
/// ann_U U = {x : xU = Ux = 0}.
Subspace annihilator_in_module(const ModuleAlgebra& u);
/// (N : U)_A = {a : aU in N, Ua in N}; throws NotSubmodule unless N is a sub-bimodule.
Subspace relative_annihilator(const Subspace& n, const BimoduleAction& action);
/// Z(A).
Subspace center(const Algebra& a);
/// span{ab}.
Subspace square_span(const Algebra& a);
/// span{a x} and span{x a}.
Subspace left_action_span(const BimoduleAction& action);
Subspace right_action_span(const BimoduleAction& action);
/// Two-sided ideal test for a subspace of A.
bool is_ideal(const Algebra& a, const Subspace& s);
bool is_submodule(const BimoduleAction& action, const Subspace& s);

/// New structure constants for the basis f_i = sum_j p(i, j) e_j.
Algebra change_basis(const Algebra& a, const Matrix& p);
/// Transports a module-algebra along basis changes of A (pa) and U (pu).
ModuleAlgebra change_basis(const ModuleAlgebra& u, const Matrix& pa, const Matrix& pu);
/// theta in the basis f_i = sum_j p(i, j) e_j.
Character change_basis(const Character& t, const Matrix& p);

}  // namespace semidirect
