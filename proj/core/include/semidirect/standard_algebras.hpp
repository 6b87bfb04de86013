#pragma once

#include <cstddef>

#include "semidirect/algebra.hpp"

namespace semidirect::standard {

/// Q with unit e, e e = e.
Algebra scalars();
/// 1-dim algebra with e e = factor * e.
Algebra scaled_line(const Rational& factor);
/// M_k(Q), basis E_ab at index a * k + b.
Algebra matrix_algebra(std::size_t k);
/// Q[t]/(t^2), basis {1, t}.
Algebra dual_numbers();
/// m-dim algebra with all products zero.
Algebra null_algebra(std::size_t m);
/// Upper-triangular k x k matrices, basis E_ab (a <= b) in row-major order.
Algebra upper_triangular(std::size_t k);
/// Q[C_k], basis g^0 .. g^(k-1).
Algebra cyclic_group_algebra(std::size_t k);
/// A x B with componentwise product; A occupies the first coordinates.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// theta(e_i) for the projection of a direct sum onto its factor character.
Character extend_character(const Character& t, std::size_t offset, std::size_t total_dim);

}  // namespace semidirect::standard
