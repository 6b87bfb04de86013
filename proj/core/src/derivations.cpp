#include "semidirect/derivations.hpp"

#include <string>
#include <tuple>

#include "semidirect/errors.hpp"
#include "recent_results.hpp"

namespace semidirect {

Vector flatten(const Matrix& map) {
  Vector v(map.rows() * map.cols());
  for (std::size_t p = 0; p < map.rows(); ++p)
    for (std::size_t q = 0; q < map.cols(); ++q) v[flat_index(p, q, map.cols())] = map(p, q);
  return v;
}

Matrix unflatten(const Vector& v, std::size_t source_dim, std::size_t target_dim) {
  if (v.size() != source_dim * target_dim)
    fail(ErrorKind::DimensionMismatch, "flattened map of length " + std::to_string(v.size()) + " is not " +
                                           std::to_string(source_dim) + "x" + std::to_string(target_dim));
  Matrix m(source_dim, target_dim);
  for (std::size_t p = 0; p < source_dim; ++p)
    for (std::size_t q = 0; q < target_dim; ++q) m(p, q) = v[flat_index(p, q, target_dim)];
  return m;
}

LinearMapSpace::LinearMapSpace(std::size_t source, std::size_t target, Subspace s)
    : source_dim(source), target_dim(target), space(std::move(s)) {
  if (space.ambient_dim() != source * target)
    fail(ErrorKind::InternalInvariantViolation, "map space ambient dimension is not source x target");
}

namespace {

void check_module(const Algebra& a, const BimoduleAction& m) {
  if (m.algebra_dim != a.dim || a.mult.dims() != std::array<std::size_t, 3>{a.dim, a.dim, a.dim})
    fail(ErrorKind::ShapeMismatch, "module action is not over algebra '" + a.name + "'");
}

}  // namespace

namespace {

LinearMapSpace compute_derivation_space(const Algebra& a, const BimoduleAction& m) {
  const std::size_t n = a.dim;
  const std::size_t md = m.module_dim;
  LinearSystem sys(n * md);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t q = 0; q < md; ++q) {
        Vector eq(n * md);
        for (std::size_t k = 0; k < n; ++k)
          if (!a.mult(i, j, k).is_zero()) eq[flat_index(k, q, md)] += a.mult(i, j, k);
        for (std::size_t r = 0; r < md; ++r) {
          if (!m.left(i, r, q).is_zero()) eq[flat_index(j, r, md)] -= m.left(i, r, q);
          if (!m.right(r, j, q).is_zero()) eq[flat_index(i, r, md)] -= m.right(r, j, q);
        }
        sys.add_equation(std::move(eq));
      }
  return LinearMapSpace(n, md, sys.solutions());
}

}  // namespace

LinearMapSpace derivation_space(const Algebra& a, const BimoduleAction& m) {
  check_module(a, m);
  thread_local detail::RecentResults<std::tuple<Tensor3, Tensor3, Tensor3>, LinearMapSpace> cache;
  return cache.get({a.mult, m.left, m.right}, [&] { return compute_derivation_space(a, m); });
}

LinearMapSpace derivation_space(const Algebra& a) { return derivation_space(a, regular_action(a)); }

bool is_derivation(const Matrix& d, const Algebra& a, const BimoduleAction& m) {
  check_module(a, m);
  if (d.rows() != a.dim || d.cols() != m.module_dim) fail(ErrorKind::ShapeMismatch, "map has wrong shape");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vector lhs = a.basis_product(i, j) * d;
      Vector rhs = m.act_left(unit_vector(a.dim, i), d.row_vector(j)) +
                   m.act_right(d.row_vector(i), unit_vector(a.dim, j));
      if (lhs != rhs) return false;
    }
  return true;
}

Matrix inner_map(const Vector& x, const BimoduleAction& m) {
  if (x.size() != m.module_dim) fail(ErrorKind::DimensionMismatch, "module element has wrong length");
  Matrix d(m.algebra_dim, m.module_dim);
  for (std::size_t p = 0; p < m.algebra_dim; ++p) {
    Vector ep = unit_vector(m.algebra_dim, p);
    Vector v = m.act_left(ep, x) - m.act_right(x, ep);
    for (std::size_t q = 0; q < m.module_dim; ++q) d(p, q) = v[q];
  }
  return d;
}

namespace {

Matrix inner_generator_rows(const BimoduleAction& m) {
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.module_dim; ++r) rows.push_back(flatten(inner_map(unit_vector(m.module_dim, r), m)));
  return Matrix::from_rows(rows, m.algebra_dim * m.module_dim);
}

}  // namespace

LinearMapSpace inner_space(const Algebra& a, const BimoduleAction& m) {
  check_module(a, m);
  return LinearMapSpace(a.dim, m.module_dim, row_space(inner_generator_rows(m)));
}

LinearMapSpace inner_space(const Algebra& a) { return inner_space(a, regular_action(a)); }

std::size_t h1_dim(const Algebra& a, const BimoduleAction& m) {
  LinearMapSpace z = derivation_space(a, m);
  LinearMapSpace b = inner_space(a, m);
  if (!z.space.contains(b.space))
    fail(ErrorKind::InternalInvariantViolation, "inner derivations are not contained in Z^1");
  return z.dim() - b.dim();
}

std::size_t h1_dim(const Algebra& a) { return h1_dim(a, regular_action(a)); }

namespace {

LinearMapSpace compute_hom_space(const BimoduleAction& u, const BimoduleAction& v) {
  const std::size_t n = u.algebra_dim;
  const std::size_t mu = u.module_dim;
  const std::size_t mv = v.module_dim;
  LinearSystem sys(mu * mv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < mu; ++p)
      for (std::size_t q = 0; q < mv; ++q) {
        // phi(e_i u_p) - e_i phi(u_p) and phi(u_p e_i) - phi(u_p) e_i, coordinate q.
        Vector left(mu * mv), right(mu * mv);
        for (std::size_t r = 0; r < mu; ++r) {
          if (!u.left(i, p, r).is_zero()) left[flat_index(r, q, mv)] += u.left(i, p, r);
          if (!u.right(p, i, r).is_zero()) right[flat_index(r, q, mv)] += u.right(p, i, r);
        }
        for (std::size_t s = 0; s < mv; ++s) {
          if (!v.left(i, s, q).is_zero()) left[flat_index(p, s, mv)] -= v.left(i, s, q);
          if (!v.right(s, i, q).is_zero()) right[flat_index(p, s, mv)] -= v.right(s, i, q);
        }
        sys.add_equation(std::move(left));
        sys.add_equation(std::move(right));
      }
  return LinearMapSpace(mu, mv, sys.solutions());
}

}  // namespace

LinearMapSpace hom_space(const BimoduleAction& u, const BimoduleAction& v) {
  if (u.algebra_dim != v.algebra_dim) fail(ErrorKind::DimensionMismatch, "modules over different algebras");
  thread_local detail::RecentResults<std::tuple<Tensor3, Tensor3, Tensor3, Tensor3>, LinearMapSpace> cache;
  return cache.get({u.left, u.right, v.left, v.right}, [&] { return compute_hom_space(u, v); });
}

bool is_bimodule_hom(const Matrix& phi, const BimoduleAction& u, const BimoduleAction& v) {
  if (phi.rows() != u.module_dim || phi.cols() != v.module_dim) fail(ErrorKind::ShapeMismatch, "map has wrong shape");
  for (std::size_t i = 0; i < u.algebra_dim; ++i) {
    Vector ei = unit_vector(u.algebra_dim, i);
    for (std::size_t p = 0; p < u.module_dim; ++p) {
      Vector up = unit_vector(u.module_dim, p);
      if (u.act_left(ei, up) * phi != v.act_left(ei, phi.row_vector(p))) return false;
      if (u.act_right(up, ei) * phi != v.act_right(phi.row_vector(p), ei)) return false;
    }
  }
  return true;
}

Matrix r_map(const Vector& a, const BimoduleAction& u) {
  if (a.size() != u.algebra_dim) fail(ErrorKind::DimensionMismatch, "algebra element has wrong length");
  Matrix r(u.module_dim, u.module_dim);
  for (std::size_t p = 0; p < u.module_dim; ++p) {
    Vector up = unit_vector(u.module_dim, p);
    Vector v = u.act_right(up, a) - u.act_left(a, up);
    for (std::size_t q = 0; q < u.module_dim; ++q) r(p, q) = v[q];
  }
  return r;
}

Matrix module_inner_map(const Vector& x, const Algebra& u) {
  if (x.size() != u.dim) fail(ErrorKind::DimensionMismatch, "module element has wrong length");
  Matrix d(u.dim, u.dim);
  for (std::size_t p = 0; p < u.dim; ++p) {
    Vector up = unit_vector(u.dim, p);
    Vector v = u.multiply(up, x) - u.multiply(x, up);
    for (std::size_t q = 0; q < u.dim; ++q) d(p, q) = v[q];
  }
  return d;
}

Matrix algebra_inner_map(const Vector& x, const BimoduleAction& u) { return inner_map(x, u); }

LinearMapSpace r_space(const Algebra& a, const ModuleAlgebra& u) {
  check_module(a, u.action);
  const std::size_t m = u.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim; ++i) rows.push_back(flatten(r_map(unit_vector(a.dim, i), u.action)));
  return LinearMapSpace(m, m, Subspace::span(m * m, rows));
}

LinearMapSpace c_space(const Algebra& a, const ModuleAlgebra& u) {
  check_module(a, u.action);
  const std::size_t m = u.dim();
  Subspace z = center(a);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < z.dim(); ++i) rows.push_back(flatten(r_map(z.basis_vector(i), u.action)));
  return LinearMapSpace(m, m, Subspace::span(m * m, rows));
}

Subspace action_centralizer(const BimoduleAction& u) { return left_kernel(inner_generator_rows(u)); }

LinearMapSpace i_space(const Algebra& a, const ModuleAlgebra& u) {
  check_module(a, u.action);
  const std::size_t m = u.dim();
  Subspace x0 = action_centralizer(u.action);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < x0.dim(); ++i) rows.push_back(flatten(module_inner_map(x0.basis_vector(i), u.algebra)));
  return LinearMapSpace(m, m, Subspace::span(m * m, rows));
}

std::optional<Vector> inner_witness(const Matrix& d, const Algebra& a, const BimoduleAction& m) {
  if (!is_derivation(d, a, m)) fail(ErrorKind::NotADerivation, "map is not in Z^1");
  auto x = solve_left(inner_generator_rows(m), flatten(d));
  if (x && inner_map(*x, m) != d)
    fail(ErrorKind::InternalInvariantViolation, "inner witness does not reproduce the derivation");
  return x;
}

}  // namespace semidirect
