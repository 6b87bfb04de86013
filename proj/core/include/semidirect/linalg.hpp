#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semidirect/rational.hpp"

namespace semidirect {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Builds a matrix from equally sized rows; `cols` is used when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector col_vector(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
/// Row vector times matrix: v * M.
Vector operator*(const Vector& v, const Matrix& m);
/// Stacks `a` over `b`; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form; zero rows dropped.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Canonical subspace of Q^d: the basis rows are the nonzero rows of an
/// rref matrix, so equality is bit-equality of bases.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the given rows, canonicalized.
  Subspace(std::size_t ambient_dim, const Matrix& spanning_rows);

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Remainder of `v` after eliminating every pivot column of the basis.
  Vector reduce(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}, ambient dimension cols(m).
Subspace kernel(const Matrix& m);
/// {v : v m = 0}, ambient dimension rows(m).
Subspace left_kernel(const Matrix& m);
/// Column space of m, ambient dimension rows(m).
Subspace image(const Matrix& m);
/// Row space of m, ambient dimension cols(m).
Subspace row_space(const Matrix& m);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);
/// dim(big) - dim(small); throws NotASubspace unless small is contained in big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);
/// a x b embedded in Q^(da + db) as {(u, v)}.
Subspace product(const Subspace& a, const Subspace& b);
/// Image of a subspace under the row-convention map v -> v m.
Subspace map_image(const Subspace& s, const Matrix& m);

/// Some x with x m = b, or nothing when the system is inconsistent. Free
/// variables of the rref parameterization are set to zero.
std::optional<Vector> solve_left(const Matrix& m, const Vector& b);

/// Streams homogeneous linear equations and keeps them in reduced row
/// echelon form, so huge overdetermined systems never need to be stored.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds the equation coeffs . x = 0.
  void add_equation(Vector coeffs);
  /// Solution space {x : every equation holds}.
  Subspace solutions() const;

 private:
  std::size_t unknowns_;
  std::vector<Vector> rows_;  // sorted by pivot, fully reduced
  std::vector<std::size_t> pivots_;
};

}  // namespace semidirect
