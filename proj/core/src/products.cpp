#include "semidirect/products.hpp"

#include <string>

#include "semidirect/errors.hpp"

namespace semidirect {

std::string_view to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Semidirect: return "semidirect";
    case ConstructionKind::Direct: return "direct";
    case ConstructionKind::ModuleExtension: return "module-extension";
    case ConstructionKind::Triangular: return "triangular";
    case ConstructionKind::ThetaLau: return "theta-lau";
    case ConstructionKind::Unitization: return "unitization";
    case ConstructionKind::Alpha: return "alpha";
  }
  return "unknown";
}

SemidirectAlgebra semidirect(const Algebra& a, const ModuleAlgebra& u) {
  require_valid(validate_algebra(a), "algebra '" + a.name + "'");
  require_valid(validate_module(a, u), "module algebra '" + u.algebra.name + "' over '" + a.name + "'");
  const std::size_t n = a.dim;
  const std::size_t m = u.dim();
  SemidirectAlgebra p;
  p.part_a = a;
  p.part_u = u;
  p.total = Algebra(a.name + "x|" + u.algebra.name, n + m);
  Tensor3& t = p.total.mult;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = a.mult(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        t(i, n + x, n + y) = u.action.left(i, x, y);
        t(n + x, i, n + y) = u.action.right(x, i, y);
      }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) t(n + x, n + y, n + z) = u.algebra.mult(x, y, z);
  return p;
}

SemidirectAlgebra direct_product(const Algebra& a, const Algebra& u) {
  SemidirectAlgebra p = semidirect(a, ModuleAlgebra{u, zero_action(a.dim, u.dim)});
  p.kind = ConstructionKind::Direct;
  p.total.name = a.name + "x" + u.name;
  return p;
}

SemidirectAlgebra module_extension(const Algebra& a, const BimoduleAction& action) {
  require_valid(validate_bimodule(a, action), "bimodule over '" + a.name + "'");
  Algebra null("U" + std::to_string(action.module_dim), action.module_dim);
  SemidirectAlgebra p = semidirect(a, ModuleAlgebra{null, action});
  p.kind = ConstructionKind::ModuleExtension;
  p.total.name = "T(" + a.name + "," + null.name + ")";
  return p;
}

ValidationReport validate_corner(const Algebra& a, const Algebra& b, const CornerBimodule& m) {
  ValidationReport report;
  const std::size_t k = m.module_dim;
  if (m.left_dim != a.dim || m.right_dim != b.dim || m.left.dims() != std::array<std::size_t, 3>{a.dim, k, k} ||
      m.right.dims() != std::array<std::size_t, 3>{k, b.dim, k})
    fail(ErrorKind::ShapeMismatch, "corner bimodule tensors do not match the algebras");
  auto left = [&](const Vector& x, const Vector& v) { return m.left.contract(x, v); };
  auto right = [&](const Vector& v, const Vector& y) { return m.right.contract(v, y); };
  for (std::size_t p = 0; p < k; ++p) {
    Vector mp = unit_vector(k, p);
    for (std::size_t i = 0; i < a.dim; ++i) {
      Vector ei = unit_vector(a.dim, i);
      for (std::size_t j = 0; j < a.dim; ++j) {
        Vector lhs = left(a.basis_product(i, j), mp);
        Vector rhs = left(ei, left(unit_vector(a.dim, j), mp));
        if (lhs != rhs) report.violations.push_back({"(aa')m=a(a'm)", {i, j, p}, lhs, rhs});
      }
      for (std::size_t j = 0; j < b.dim; ++j) {
        Vector fj = unit_vector(b.dim, j);
        Vector lhs = right(left(ei, mp), fj);
        Vector rhs = left(ei, right(mp, fj));
        if (lhs != rhs) report.violations.push_back({"(am)b=a(mb)", {i, p, j}, lhs, rhs});
      }
    }
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) {
        Vector lhs = right(mp, b.basis_product(i, j));
        Vector rhs = right(right(mp, unit_vector(b.dim, i)), unit_vector(b.dim, j));
        if (lhs != rhs) report.violations.push_back({"m(bb')=(mb)b'", {p, i, j}, lhs, rhs});
      }
  }
  return report;
}

SemidirectAlgebra triangular(const Algebra& a, const Algebra& b, const CornerBimodule& m) {
  ValidationReport report = validate_corner(a, b, m);
  if (!report.ok()) fail(ErrorKind::NotBimodule, report.summary());
  Algebra ab = direct_product(a, b).total;
  BimoduleAction action(ab.dim, m.module_dim);
  for (std::size_t p = 0; p < m.module_dim; ++p)
    for (std::size_t q = 0; q < m.module_dim; ++q) {
      for (std::size_t i = 0; i < a.dim; ++i) action.left(i, p, q) = m.left(i, p, q);
      for (std::size_t j = 0; j < b.dim; ++j) action.right(p, a.dim + j, q) = m.right(p, j, q);
    }
  SemidirectAlgebra t = module_extension(ab, action);
  t.kind = ConstructionKind::Triangular;
  t.total.name = "Tri(" + a.name + ",M," + b.name + ")";
  return t;
}

SemidirectAlgebra theta_lau(const Algebra& a, const Algebra& u, const Character& theta) {
  if (!validate_character(a, theta))
    fail(ErrorKind::InvalidCharacter, "'" + theta.name + "' is not a nonzero character of '" + a.name + "'");
  SemidirectAlgebra p = semidirect(a, ModuleAlgebra{u, character_action(theta, u.dim)});
  p.kind = ConstructionKind::ThetaLau;
  p.theta = theta;
  p.total.name = a.name + "x|theta" + u.name;
  return p;
}

SemidirectAlgebra unitization(const Algebra& u) {
  Algebra q("Q", 1);
  q.mult(0, 0, 0) = Rational(1);
  SemidirectAlgebra p = theta_lau(q, u, Character{"id", Vector{Rational(1)}});
  p.kind = ConstructionKind::Unitization;
  p.total.name = u.name + "#";
  return p;
}

std::optional<std::array<std::size_t, 2>> homomorphism_violation(const Algebra& a, const Algebra& u,
                                                                 const Matrix& alpha) {
  if (alpha.rows() != a.dim || alpha.cols() != u.dim)
    fail(ErrorKind::ShapeMismatch, "alpha must be a dim(A) x dim(U) matrix");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (a.basis_product(i, j) * alpha != u.multiply(alpha.row_vector(i), alpha.row_vector(j)))
        return std::array<std::size_t, 2>{i, j};
  return std::nullopt;
}

SemidirectAlgebra alpha_product(const Algebra& a, const Algebra& u, const Matrix& alpha) {
  if (auto bad = homomorphism_violation(a, u, alpha))
    fail(ErrorKind::NotHomomorphism, "alpha(e_" + std::to_string((*bad)[0]) + " e_" + std::to_string((*bad)[1]) +
                                         ") != alpha(e_i) alpha(e_j)");
  BimoduleAction action(a.dim, u.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vector ai = alpha.row_vector(i);
    for (std::size_t p = 0; p < u.dim; ++p) {
      Vector up = unit_vector(u.dim, p);
      Vector l = u.multiply(ai, up);
      Vector r = u.multiply(up, ai);
      for (std::size_t q = 0; q < u.dim; ++q) {
        action.left(i, p, q) = l[q];
        action.right(p, i, q) = r[q];
      }
    }
  }
  SemidirectAlgebra p = semidirect(a, ModuleAlgebra{u, action});
  p.kind = ConstructionKind::Alpha;
  p.alpha = alpha;
  p.total.name = a.name + "x|alpha" + u.name;
  return p;
}

Matrix alpha_iso(const Algebra& a, const Algebra& u, const Matrix& alpha) {
  if (alpha.rows() != a.dim || alpha.cols() != u.dim)
    fail(ErrorKind::ShapeMismatch, "alpha must be a dim(A) x dim(U) matrix");
  const std::size_t n = a.dim;
  Matrix iso = Matrix::identity(n + u.dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < u.dim; ++r) iso(i, n + r) = -alpha(i, r);
  return iso;
}

std::optional<std::array<std::size_t, 2>> transport_violation(const Matrix& phi, const Algebra& source,
                                                              const Algebra& target) {
  if (phi.rows() != source.dim || phi.cols() != target.dim)
    fail(ErrorKind::ShapeMismatch, "map shape does not match the algebras");
  for (std::size_t s = 0; s < source.dim; ++s)
    for (std::size_t t = 0; t < source.dim; ++t)
      if (source.basis_product(s, t) * phi != target.multiply(phi.row_vector(s), phi.row_vector(t)))
        return std::array<std::size_t, 2>{s, t};
  return std::nullopt;
}

Algebra quotient_by_module_block(const SemidirectAlgebra& p) {
  const std::size_t n = p.n();
  Algebra q(p.total.name + "/U", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) q.mult(i, j, k) = p.total.mult(i, j, k);
  return q;
}

bool a_block_closed(const SemidirectAlgebra& p) {
  const std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = n; k < p.total.dim; ++k)
        if (!p.total.mult(i, j, k).is_zero()) return false;
  return true;
}

bool u_block_is_ideal(const SemidirectAlgebra& p) {
  const std::size_t n = p.n();
  const std::size_t d = p.total.dim;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t x = n; x < d; ++x)
      for (std::size_t k = 0; k < n; ++k)
        if (!p.total.mult(s, x, k).is_zero() || !p.total.mult(x, s, k).is_zero()) return false;
  return true;
}

DerivationFixture fixture_example_3_3(const Algebra& b) {
  const std::size_t k = b.dim;
  Algebra a = module_extension(b, regular_action(b)).total;
  a.name = "T(" + b.name + "," + b.name + ")";
  BimoduleAction action(2 * k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        action.left(i, p, q) = b.mult(i, p, q);
        action.right(p, i, q) = b.mult(p, i, q);
      }
  DerivationFixture f{module_extension(a, action), Matrix(3 * k, 3 * k)};
  for (std::size_t p = 0; p < k; ++p) f.derivation(2 * k + p, k + p) = Rational(1);
  return f;
}

DerivationFixture fixture_example_3_4(const Algebra& a, const BimoduleAction& c, const Matrix& gamma) {
  const std::size_t n = a.dim;
  const std::size_t dc = c.module_dim;
  require_valid(validate_bimodule(a, c), "bimodule C over '" + a.name + "'");
  if (gamma.rows() != dc || gamma.cols() != n) fail(ErrorKind::ShapeMismatch, "gamma must be dim(C) x dim(A)");
  for (std::size_t y = 0; y < dc; ++y) {
    Vector cy = unit_vector(dc, y);
    for (std::size_t i = 0; i < n; ++i) {
      Vector ei = unit_vector(n, i);
      if (c.act_left(ei, cy) * gamma != a.multiply(ei, gamma.row_vector(y)) ||
          c.act_right(cy, ei) * gamma != a.multiply(gamma.row_vector(y), ei))
        fail(ErrorKind::NotHomomorphism, "gamma is not an A-bimodule homomorphism at (" + std::to_string(i) +
                                             "," + std::to_string(y) + ")");
    }
    for (std::size_t z = 0; z < dc; ++z) {
      Vector lhs = c.act_right(cy, gamma.row_vector(z)) + c.act_left(gamma.row_vector(y), unit_vector(dc, z));
      if (!is_zero(lhs))
        fail(ErrorKind::GammaIdentityFailed, "c gamma(c') + gamma(c) c' = " + to_string(lhs) + " at (" +
                                                 std::to_string(y) + "," + std::to_string(z) + ")");
    }
  }
  const std::size_t m = n + dc;
  ModuleAlgebra u{Algebra(a.name + "xC", m), BimoduleAction(n, m)};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) u.algebra.mult(p, q, r) = a.mult(p, q, r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        u.action.left(i, p, q) = a.mult(i, p, q);
        u.action.right(p, i, q) = a.mult(p, i, q);
      }
    for (std::size_t p = 0; p < dc; ++p)
      for (std::size_t q = 0; q < dc; ++q) {
        u.action.left(i, n + p, n + q) = c.left(i, p, q);
        u.action.right(n + p, i, n + q) = c.right(p, i, q);
      }
  }
  DerivationFixture f{semidirect(a, u), Matrix(n + m, n + m)};
  for (std::size_t y = 0; y < dc; ++y)
    for (std::size_t k = 0; k < n; ++k) {
      f.derivation(2 * n + y, k) = gamma(y, k);
      f.derivation(2 * n + y, n + k) = -gamma(y, k);
    }
  return f;
}

}  // namespace semidirect
