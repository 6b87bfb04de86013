#include "semidirect/linalg.hpp"

#include <algorithm>
#include <string>

#include "semidirect/errors.hpp"

namespace semidirect {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail(ErrorKind::DimensionMismatch, "row " + std::to_string(r) + " has length " +
                                             std::to_string(rows[r].size()) + ", expected " +
                                             std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::col_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j).add_product(aik, b(k, j));
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Vector operator*(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) fail(ErrorKind::DimensionMismatch, "vector-matrix product shape mismatch");
  Vector r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r[j].add_product(v[i], m(i, j));
  }
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail(ErrorKind::DimensionMismatch, "vstack column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns. Rows past the rank are zero.
std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < col_limit && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    Rational inv = Rational(1) / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(lead, k).is_zero()) m(r, k).sub_product(f, m(lead, k));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

Matrix take_rows(const Matrix& m, std::size_t count) {
  Matrix out(count, m.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

// Kernel basis of an rref system with the given pivots.
std::vector<Vector> kernel_from_rref(const Matrix& r, const std::vector<std::size_t>& pivots,
                                     std::size_t unknowns) {
  std::vector<bool> is_pivot(unknowns, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    Vector v(unknowns);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Matrix rref(const Matrix& m) {
  Matrix w = m;
  auto pivots = gauss_jordan(w, w.cols());
  return take_rows(w, pivots.size());
}

std::size_t rank(const Matrix& m) {
  Matrix w = m;
  return gauss_jordan(w, w.cols()).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Rational(1);
  }
  auto pivots = gauss_jordan(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Subspace::Subspace(std::size_t ambient_dim, const Matrix& spanning_rows) : ambient_dim_(ambient_dim) {
  if (spanning_rows.cols() != ambient_dim && spanning_rows.rows() != 0)
    fail(ErrorKind::DimensionMismatch, "spanning rows have " + std::to_string(spanning_rows.cols()) +
                                           " columns, ambient dimension is " + std::to_string(ambient_dim));
  Matrix w(spanning_rows.rows(), ambient_dim);
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) w(r, c) = spanning_rows(r, c);
  pivots_ = gauss_jordan(w, ambient_dim);
  basis_ = take_rows(w, pivots_.size());
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim)); }

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return Subspace(ambient_dim, Matrix::from_rows(vectors, ambient_dim));
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_)
    fail(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                           " in ambient dimension " + std::to_string(ambient_dim_));
  Vector w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Rational f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient_dim_; ++c)
      if (!basis_(i, c).is_zero()) w[c].sub_product(f, basis_(i, c));
  }
  return w;
}

bool Subspace::contains(const Vector& v) const { return semidirect::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_)
    fail(ErrorKind::DimensionMismatch, "containment across ambient dimensions " +
                                           std::to_string(other.ambient_dim_) + " and " +
                                           std::to_string(ambient_dim_));
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  Matrix w = m;
  auto pivots = gauss_jordan(w, w.cols());
  return Subspace::span(m.cols(), kernel_from_rref(w, pivots, m.cols()));
}

Subspace left_kernel(const Matrix& m) { return kernel(m.transpose()); }

Subspace image(const Matrix& m) { return Subspace(m.rows(), m.transpose()); }

Subspace row_space(const Matrix& m) { return Subspace(m.cols(), m); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "sum of subspaces in ambient dimensions " +
                                           std::to_string(a.ambient_dim()) + " and " +
                                           std::to_string(b.ambient_dim()));
  return Subspace(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "intersection of subspaces in ambient dimensions " +
                                           std::to_string(a.ambient_dim()) + " and " +
                                           std::to_string(b.ambient_dim()));
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // (lambda, mu) with lambda A + mu B = 0 gives lambda A in both spaces.
  Subspace coeffs = left_kernel(vstack(a.basis(), b.basis()));
  std::vector<Vector> elems;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) {
    Vector full = coeffs.basis_vector(i);
    Vector lambda(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    elems.push_back(lambda * a.basis());
  }
  return Subspace::span(a.ambient_dim(), elems);
}

bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "quotient across ambient dimensions " +
                                           std::to_string(big.ambient_dim()) + " and " +
                                           std::to_string(small.ambient_dim()));
  if (!big.contains(small)) fail(ErrorKind::NotASubspace, "quotient denominator is not contained in numerator");
  return big.dim() - small.dim();
}

Subspace product(const Subspace& a, const Subspace& b) {
  const std::size_t da = a.ambient_dim();
  const std::size_t db = b.ambient_dim();
  Matrix m(a.dim() + b.dim(), da + db);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < da; ++c) m(r, c) = a.basis()(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < db; ++c) m(a.dim() + r, da + c) = b.basis()(r, c);
  return Subspace(da + db, m);
}

Subspace map_image(const Subspace& s, const Matrix& m) {
  if (s.ambient_dim() != m.rows()) fail(ErrorKind::DimensionMismatch, "map_image shape mismatch");
  return Subspace(m.cols(), s.basis() * m);
}

std::optional<Vector> solve_left(const Matrix& m, const Vector& b) {
  if (b.size() != m.cols()) fail(ErrorKind::DimensionMismatch, "solve_left right-hand side length mismatch");
  // x m = b  <=>  m^T x = b.
  const std::size_t unknowns = m.rows();
  Matrix aug(m.cols(), unknowns + 1);
  for (std::size_t r = 0; r < m.cols(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) aug(r, c) = m(c, r);
    aug(r, unknowns) = b[r];
  }
  auto pivots = gauss_jordan(aug, unknowns);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug(r, unknowns).is_zero()) return std::nullopt;
  Vector x(unknowns);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, unknowns);
  return x;
}

void LinearSystem::add_equation(Vector coeffs) {
  if (coeffs.size() != unknowns_)
    fail(ErrorKind::DimensionMismatch, "equation of length " + std::to_string(coeffs.size()) + " for " +
                                           std::to_string(unknowns_) + " unknowns");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (coeffs[p].is_zero()) continue;
    Rational f = coeffs[p];
    const Vector& row = rows_[i];
    for (std::size_t c = p; c < unknowns_; ++c)
      if (!row[c].is_zero()) coeffs[c].sub_product(f, row[c]);
  }
  auto it = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& x) { return !x.is_zero(); });
  if (it == coeffs.end()) return;
  const std::size_t p = static_cast<std::size_t>(it - coeffs.begin());
  Rational inv = Rational(1) / coeffs[p];
  for (std::size_t c = p; c < unknowns_; ++c)
    if (!coeffs[c].is_zero()) coeffs[c] *= inv;
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Rational f = row[p];
    for (std::size_t c = p; c < unknowns_; ++c)
      if (!coeffs[c].is_zero()) row[c].sub_product(f, coeffs[c]);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto offset = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + offset, std::move(coeffs));
}

Subspace LinearSystem::solutions() const {
  Matrix r = Matrix::from_rows(rows_, unknowns_);
  return Subspace::span(unknowns_, kernel_from_rref(r, pivots_, unknowns_));
}

}  // namespace semidirect
