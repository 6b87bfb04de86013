#include "semidirect/algebra.hpp"

#include <sstream>

#include "semidirect/errors.hpp"

namespace semidirect {

bool Tensor3::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Vector Tensor3::contract(const Vector& x, const Vector& y) const {
  if (x.size() != dims_[0] || y.size() != dims_[1])
    fail(ErrorKind::DimensionMismatch, "tensor contraction with vectors of lengths " + std::to_string(x.size()) +
                                           " and " + std::to_string(y.size()));
  Vector out(dims_[2]);
  for (std::size_t i = 0; i < dims_[0]; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dims_[1]; ++j) {
      if (y[j].is_zero()) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dims_[2]; ++k) {
        const Rational& c = (*this)(i, j, k);
        if (!c.is_zero()) out[k].add_product(s, c);
      }
    }
  }
  return out;
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = mult(i, j, k);
  return v;
}

Rational Character::operator()(const Vector& a) const {
  if (a.size() != values.size()) fail(ErrorKind::DimensionMismatch, "character applied to vector of wrong length");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) s.add_product(a[i], values[i]);
  return s;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << axiom << " at (";
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
  os << "): " << to_string(lhs) << " != " << to_string(rhs);
  return os.str();
}

std::string ValidationReport::summary(std::size_t max_items) const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) os << "; " << violations[i].describe();
  return os.str();
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (!report.ok()) fail(ErrorKind::ValidationFailed, what + ": " + report.summary());
}

namespace {

void check_algebra_shape(const Algebra& a) {
  const auto& d = a.mult.dims();
  if (d[0] != a.dim || d[1] != a.dim || d[2] != a.dim)
    fail(ErrorKind::ShapeMismatch, "structure tensor of algebra '" + a.name + "' does not match dim " +
                                       std::to_string(a.dim));
}

void check_action_shape(const Algebra& a, const BimoduleAction& action, std::size_t module_dim) {
  if (action.algebra_dim != a.dim || action.module_dim != module_dim)
    fail(ErrorKind::ShapeMismatch, "action dimensions do not match algebra '" + a.name + "'");
  const auto& l = action.left.dims();
  const auto& r = action.right.dims();
  if (l[0] != a.dim || l[1] != module_dim || l[2] != module_dim || r[0] != module_dim || r[1] != a.dim ||
      r[2] != module_dim)
    fail(ErrorKind::ShapeMismatch, "action tensors have wrong shape");
}

void record(ValidationReport& report, const char* axiom, std::vector<std::size_t> idx, Vector lhs, Vector rhs) {
  if (lhs != rhs) report.violations.push_back({axiom, std::move(idx), std::move(lhs), std::move(rhs)});
}

}  // namespace

ValidationReport validate_algebra(const Algebra& a) {
  check_algebra_shape(a);
  ValidationReport report;
  const std::size_t n = a.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = a.multiply(ij, unit_vector(n, k));
        Vector rhs = a.multiply(unit_vector(n, i), a.basis_product(j, k));
        record(report, "associativity", {i, j, k}, std::move(lhs), std::move(rhs));
      }
    }
  return report;
}

ValidationReport validate_bimodule(const Algebra& a, const BimoduleAction& action) {
  check_algebra_shape(a);
  check_action_shape(a, action, action.module_dim);
  ValidationReport report;
  const std::size_t n = a.dim;
  const std::size_t m = action.module_dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = unit_vector(n, i);
      Vector ej = unit_vector(n, j);
      Vector ij = a.basis_product(i, j);
      for (std::size_t p = 0; p < m; ++p) {
        Vector up = unit_vector(m, p);
        record(report, "(ab)x=a(bx)", {i, j, p}, action.act_left(ij, up),
               action.act_left(ei, action.act_left(ej, up)));
        record(report, "x(ab)=(xa)b", {p, i, j}, action.act_right(up, ij),
               action.act_right(action.act_right(up, ei), ej));
        record(report, "(ax)b=a(xb)", {i, p, j}, action.act_right(action.act_left(ei, up), ej),
               action.act_left(ei, action.act_right(up, ej)));
      }
    }
  return report;
}

ValidationReport validate_module(const Algebra& a, const ModuleAlgebra& u) {
  check_algebra_shape(u.algebra);
  check_action_shape(a, u.action, u.dim());
  ValidationReport report = validate_bimodule(a, u.action);
  for (auto& v : validate_algebra(u.algebra).violations) {
    v.axiom = "U-" + v.axiom;
    report.violations.push_back(std::move(v));
  }
  const std::size_t n = a.dim;
  const std::size_t m = u.dim();
  const Algebra& ua = u.algebra;
  for (std::size_t i = 0; i < n; ++i) {
    Vector ei = unit_vector(n, i);
    for (std::size_t p = 0; p < m; ++p) {
      Vector up = unit_vector(m, p);
      for (std::size_t q = 0; q < m; ++q) {
        Vector uq = unit_vector(m, q);
        record(report, "(a.x)y=a.(xy)", {i, p, q}, ua.multiply(u.action.act_left(ei, up), uq),
               u.action.act_left(ei, ua.basis_product(p, q)));
        record(report, "(xy).a=x(y.a)", {p, q, i}, u.action.act_right(ua.basis_product(p, q), ei),
               ua.multiply(up, u.action.act_right(uq, ei)));
        record(report, "(x.a)y=x(a.y)", {p, i, q}, ua.multiply(u.action.act_right(up, ei), uq),
               ua.multiply(up, u.action.act_left(ei, uq)));
      }
    }
  }
  return report;
}

bool validate_character(const Algebra& a, const Character& t) {
  check_algebra_shape(a);
  if (t.values.size() != a.dim) return false;
  if (is_zero(t.values)) return false;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (t(a.basis_product(i, j)) != t.values[i] * t.values[j]) return false;
  return true;
}

BimoduleAction regular_action(const Algebra& a) {
  BimoduleAction act(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t p = 0; p < a.dim; ++p)
      for (std::size_t q = 0; q < a.dim; ++q) {
        act.left(i, p, q) = a.mult(i, p, q);
        act.right(p, i, q) = a.mult(p, i, q);
      }
  return act;
}

BimoduleAction zero_action(std::size_t algebra_dim, std::size_t module_dim) {
  return BimoduleAction(algebra_dim, module_dim);
}

BimoduleAction character_action(const Character& theta, std::size_t module_dim) {
  BimoduleAction act(theta.values.size(), module_dim);
  for (std::size_t i = 0; i < theta.values.size(); ++i)
    for (std::size_t p = 0; p < module_dim; ++p) {
      act.left(i, p, p) = theta.values[i];
      act.right(p, i, p) = theta.values[i];
    }
  return act;
}

ModuleAlgebra regular_module(const Algebra& a) { return ModuleAlgebra{a, regular_action(a)}; }

bool is_commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.mult(i, j, k) != a.mult(j, i, k)) return false;
  return true;
}

bool is_symmetric(const BimoduleAction& action) {
  for (std::size_t i = 0; i < action.algebra_dim; ++i)
    for (std::size_t p = 0; p < action.module_dim; ++p)
      for (std::size_t q = 0; q < action.module_dim; ++q)
        if (action.left(i, p, q) != action.right(p, i, q)) return false;
  return true;
}

Subspace annihilator_in_algebra(const Algebra& a, const BimoduleAction& action) {
  check_action_shape(a, action, action.module_dim);
  const std::size_t n = a.dim;
  const std::size_t m = action.module_dim;
  Matrix rows(n, 2 * m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        rows(i, p * m + q) = action.left(i, p, q);
        rows(i, m * m + p * m + q) = action.right(p, i, q);
      }
  return left_kernel(rows);
}

Subspace annihilator_in_module(const ModuleAlgebra& u) {
  const std::size_t m = u.dim();
  Matrix rows(m, 2 * m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        rows(r, p * m + q) = u.algebra.mult(r, p, q);
        rows(r, m * m + p * m + q) = u.algebra.mult(p, r, q);
      }
  return left_kernel(rows);
}

bool is_submodule(const BimoduleAction& action, const Subspace& s) {
  if (s.ambient_dim() != action.module_dim) return false;
  for (std::size_t b = 0; b < s.dim(); ++b) {
    Vector v = s.basis_vector(b);
    for (std::size_t i = 0; i < action.algebra_dim; ++i) {
      Vector ei = unit_vector(action.algebra_dim, i);
      if (!s.contains(action.act_left(ei, v)) || !s.contains(action.act_right(v, ei))) return false;
    }
  }
  return true;
}

Subspace relative_annihilator(const Subspace& n, const BimoduleAction& action) {
  if (n.ambient_dim() != action.module_dim)
    fail(ErrorKind::DimensionMismatch, "submodule lives in the wrong ambient space");
  if (!is_submodule(action, n)) fail(ErrorKind::NotSubmodule, "N is not an A-sub-bimodule of U");
  const std::size_t na = action.algebra_dim;
  const std::size_t m = action.module_dim;
  // v in N iff v . w = 0 for every w in the orthogonal complement of N.
  Subspace perp = kernel(n.basis().rows() ? n.basis() : Matrix(0, m));
  const std::size_t k = perp.dim();
  Matrix rows(na, 2 * m * k);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t w = 0; w < k; ++w) {
        Rational l, r;
        for (std::size_t q = 0; q < m; ++q) {
          const Rational& wq = perp.basis()(w, q);
          if (wq.is_zero()) continue;
          l.add_product(action.left(i, p, q), wq);
          r.add_product(action.right(p, i, q), wq);
        }
        rows(i, p * k + w) = l;
        rows(i, m * k + p * k + w) = r;
      }
  return left_kernel(rows);
}

Subspace center(const Algebra& a) {
  check_algebra_shape(a);
  const std::size_t n = a.dim;
  Matrix rows(n, n * n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) rows(z, i * n + k) = a.mult(z, i, k) - a.mult(i, z, k);
  return left_kernel(rows);
}

Subspace square_span(const Algebra& a) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) v.push_back(a.basis_product(i, j));
  return Subspace::span(a.dim, v);
}

Subspace left_action_span(const BimoduleAction& action) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < action.algebra_dim; ++i)
    for (std::size_t p = 0; p < action.module_dim; ++p) {
      Vector w(action.module_dim);
      for (std::size_t q = 0; q < action.module_dim; ++q) w[q] = action.left(i, p, q);
      v.push_back(std::move(w));
    }
  return Subspace::span(action.module_dim, v);
}

Subspace right_action_span(const BimoduleAction& action) {
  std::vector<Vector> v;
  for (std::size_t p = 0; p < action.module_dim; ++p)
    for (std::size_t i = 0; i < action.algebra_dim; ++i) {
      Vector w(action.module_dim);
      for (std::size_t q = 0; q < action.module_dim; ++q) w[q] = action.right(p, i, q);
      v.push_back(std::move(w));
    }
  return Subspace::span(action.module_dim, v);
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim) return false;
  for (std::size_t b = 0; b < s.dim(); ++b) {
    Vector v = s.basis_vector(b);
    for (std::size_t i = 0; i < a.dim; ++i) {
      Vector ei = unit_vector(a.dim, i);
      if (!s.contains(a.multiply(ei, v)) || !s.contains(a.multiply(v, ei))) return false;
    }
  }
  return true;
}

namespace {

Matrix checked_inverse(const Matrix& p, std::size_t n) {
  if (p.rows() != n || p.cols() != n) fail(ErrorKind::ShapeMismatch, "basis change has wrong shape");
  auto q = inverse(p);
  if (!q) fail(ErrorKind::ShapeMismatch, "basis change matrix is singular");
  return *q;
}

}  // namespace

Algebra change_basis(const Algebra& a, const Matrix& p) {
  Matrix q = checked_inverse(p, a.dim);
  Algebra out(a.name, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vector prod = a.multiply(p.row_vector(i), p.row_vector(j)) * q;
      for (std::size_t k = 0; k < a.dim; ++k) out.mult(i, j, k) = prod[k];
    }
  return out;
}

ModuleAlgebra change_basis(const ModuleAlgebra& u, const Matrix& pa, const Matrix& pu) {
  const std::size_t n = u.action.algebra_dim;
  const std::size_t m = u.dim();
  checked_inverse(pa, n);
  Matrix qu = checked_inverse(pu, m);
  ModuleAlgebra out{change_basis(u.algebra, pu), BimoduleAction(n, m)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      Vector l = u.action.act_left(pa.row_vector(i), pu.row_vector(p)) * qu;
      Vector r = u.action.act_right(pu.row_vector(p), pa.row_vector(i)) * qu;
      for (std::size_t q = 0; q < m; ++q) {
        out.action.left(i, p, q) = l[q];
        out.action.right(p, i, q) = r[q];
      }
    }
  return out;
}

Character change_basis(const Character& t, const Matrix& p) {
  Character out{t.name, Vector(t.values.size())};
  for (std::size_t i = 0; i < t.values.size(); ++i) out.values[i] = t(p.row_vector(i));
  return out;
}

}  // namespace semidirect
