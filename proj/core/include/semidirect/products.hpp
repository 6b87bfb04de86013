#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "semidirect/algebra.hpp"

namespace semidirect {

enum class ConstructionKind { Semidirect, Direct, ModuleExtension, Triangular, ThetaLau, Unitization, Alpha };

std::string_view to_string(ConstructionKind kind);

/// A x U with (a, x)(b, y) = (ab, a.y + x.b + xy). Coordinates 0..n-1 hold
/// A and n..n+m-1 hold U; every downstream block extraction relies on this.
struct SemidirectAlgebra {
  Algebra total;
  Algebra part_a;
  ModuleAlgebra part_u;
  ConstructionKind kind = ConstructionKind::Semidirect;
  std::optional<Character> theta;  // theta-Lau products
  std::optional<Matrix> alpha;     // alpha products, rows alpha(e_i)

  std::size_t n() const { return part_a.dim; }
  std::size_t m() const { return part_u.dim(); }
};

/// (A, B)-bimodule M: e_i m_p for e_i in A and m_p f_j for f_j in B.
struct CornerBimodule {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  std::size_t module_dim = 0;
  Tensor3 left;   // (left_dim, module_dim, module_dim)
  Tensor3 right;  // (module_dim, right_dim, module_dim)

  CornerBimodule() = default;
  CornerBimodule(std::size_t na, std::size_t nb, std::size_t m)
      : left_dim(na), right_dim(nb), module_dim(m), left(na, m, m), right(m, nb, m) {}
};

SemidirectAlgebra semidirect(const Algebra& a, const ModuleAlgebra& u);
SemidirectAlgebra direct_product(const Algebra& a, const Algebra& u);
/// T(A, U): U carries the zero product.
SemidirectAlgebra module_extension(const Algebra& a, const BimoduleAction& action);
/// Tri(A, M, B) realized as T(A x B, M) with (a, b)m = am and m(a, b) = mb.
SemidirectAlgebra triangular(const Algebra& a, const Algebra& b, const CornerBimodule& m);
SemidirectAlgebra theta_lau(const Algebra& a, const Algebra& u, const Character& theta);
/// Q x| U with the identity character, i.e. U with a unit adjoined.
SemidirectAlgebra unitization(const Algebra& u);
/// A x|_alpha U with a x = alpha(a) x and x a = x alpha(a); `alpha` has rows alpha(e_i).
SemidirectAlgebra alpha_product(const Algebra& a, const Algebra& u, const Matrix& alpha);
/// (a, x) -> (a, x - alpha(a)) as a row-convention matrix on A x U.
Matrix alpha_iso(const Algebra& a, const Algebra& u, const Matrix& alpha);

/// First basis pair (i, j) with alpha(e_i e_j) != alpha(e_i) alpha(e_j).
std::optional<std::array<std::size_t, 2>> homomorphism_violation(const Algebra& a, const Algebra& u,
                                                                 const Matrix& alpha);
/// First basis pair (s, t) where phi(b_s b_t) != phi(b_s) phi(b_t) with the
/// left product in `source` and the right one in `target`.
std::optional<std::array<std::size_t, 2>> transport_violation(const Matrix& phi, const Algebra& source,
                                                              const Algebra& target);

ValidationReport validate_corner(const Algebra& a, const Algebra& b, const CornerBimodule& m);

/// Structure constants of (A x| U)/U read back on the A coordinates.
Algebra quotient_by_module_block(const SemidirectAlgebra& p);
bool a_block_closed(const SemidirectAlgebra& p);
bool u_block_is_ideal(const SemidirectAlgebra& p);

struct DerivationFixture {
  SemidirectAlgebra algebra;
  Matrix derivation;  // row s = D(b_s)
};

/// A = T(B, B), U = B with (a, b)x = ax and x(a, b) = xa, inside T(A, U),
/// with D((a, b), x) = ((0, x), 0).
DerivationFixture fixture_example_3_3(const Algebra& b);
/// U = A x C with (x, y)(x', y') = (xx', 0) and D = (tau1, tau2) where
/// tau1(x, y) = gamma(y), tau2(x, y) = (-gamma(y), 0). `gamma` has rows gamma(c_y).
DerivationFixture fixture_example_3_4(const Algebra& a, const BimoduleAction& c, const Matrix& gamma);

}  // namespace semidirect
