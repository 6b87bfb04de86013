#pragma once

#include <cstddef>
#include <optional>

#include "semidirect/algebra.hpp"

namespace semidirect {

// Linear maps V -> W are Matrix objects of shape dim(V) x dim(W) whose row p
// holds the image of basis vector p, so phi(v) = v * phi. Flattened, entry
// (p, q) sits at coordinate p * dim(W) + q. Every space of maps below uses
// this convention.

inline std::size_t flat_index(std::size_t p, std::size_t q, std::size_t target_dim) {
  return p * target_dim + q;
}
Vector flatten(const Matrix& map);
Matrix unflatten(const Vector& v, std::size_t source_dim, std::size_t target_dim);

/// A subspace of Hom(V, W) stored flattened.
struct LinearMapSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  Subspace space;

  LinearMapSpace() = default;
  LinearMapSpace(std::size_t source, std::size_t target, Subspace s);

  std::size_t dim() const { return space.dim(); }
  Matrix basis_map(std::size_t i) const { return unflatten(space.basis_vector(i), source_dim, target_dim); }
  bool contains(const Matrix& map) const { return space.contains(flatten(map)); }
};

/// Z^1(A, M): kernel of delta(e_i e_j) - e_i delta(e_j) - delta(e_i) e_j.
LinearMapSpace derivation_space(const Algebra& a, const BimoduleAction& m);
/// Z^1(A) = Z^1(A, A).
LinearMapSpace derivation_space(const Algebra& a);
bool is_derivation(const Matrix& d, const Algebra& a, const BimoduleAction& m);

/// Matrix of a -> a x - x a.
Matrix inner_map(const Vector& x, const BimoduleAction& m);
/// N^1(A, M): image of x -> id_x.
LinearMapSpace inner_space(const Algebra& a, const BimoduleAction& m);
LinearMapSpace inner_space(const Algebra& a);

/// dim Z^1(A, M) - dim N^1(A, M).
std::size_t h1_dim(const Algebra& a, const BimoduleAction& m);
std::size_t h1_dim(const Algebra& a);

/// Hom_A(U, V): maps with phi(a x) = a phi(x) and phi(x a) = phi(x) a.
LinearMapSpace hom_space(const BimoduleAction& u, const BimoduleAction& v);
bool is_bimodule_hom(const Matrix& phi, const BimoduleAction& u, const BimoduleAction& v);

/// r_a : x -> x a - a x on U.
Matrix r_map(const Vector& a, const BimoduleAction& u);
/// id_{U,x} : y -> y x - x y on U.
Matrix module_inner_map(const Vector& x, const Algebra& u);
/// id_{A,x} : a -> a x - x a from A to U (same as inner_map).
Matrix algebra_inner_map(const Vector& x, const BimoduleAction& u);

/// R_A(U) = {r_a}.
LinearMapSpace r_space(const Algebra& a, const ModuleAlgebra& u);
/// C_A(U) = {r_a : id_a = 0}.
LinearMapSpace c_space(const Algebra& a, const ModuleAlgebra& u);
/// I(U) = {id_{U,x} : id_{A,x} = 0}.
LinearMapSpace i_space(const Algebra& a, const ModuleAlgebra& u);
/// {x in U : id_{A,x} = 0}.
Subspace action_centralizer(const BimoduleAction& u);

/// Some x with id_x = d. Throws NotADerivation when d is not in Z^1(A, M).
std::optional<Vector> inner_witness(const Matrix& d, const Algebra& a, const BimoduleAction& m);

}  // namespace semidirect
