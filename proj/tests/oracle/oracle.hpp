#pragma once

// Brute-force reference for derivation counts. Algebras are given as explicit
// bases of k x k matrices and multiplied as matrices, so nothing here shares
// code or conventions with the structure-constant library.

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = boost::rational<std::int64_t>;
using Mat = std::vector<std::vector<Q>>;

// Avoids boost::rational == int, which recurses under C++20 rewritten comparisons.
inline bool is0(const Q& q) { return q.numerator() == 0; }

inline Mat zeros(std::size_t k) { return Mat(k, std::vector<Q>(k, Q(0))); }

inline Mat unit(std::size_t k, std::size_t r, std::size_t c) {
  Mat m = zeros(k);
  m[r][c] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  std::size_t k = a.size();
  Mat c = zeros(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < k; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline std::vector<Q> entries(const Mat& m) {
  std::vector<Q> v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

// Rank by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Q>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && is0(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is0(rows[i][c])) continue;
      Q f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

struct MatrixAlgebra {
  std::vector<Mat> basis;

  std::size_t dim() const { return basis.size(); }
  std::size_t size() const { return basis.empty() ? 0 : basis[0].size(); }

  // Coordinates of m in the basis (throws if m is outside the span).
  std::vector<Q> coords(const Mat& m) const {
    std::size_t n = dim();
    std::vector<Q> target = entries(m);
    std::vector<std::vector<Q>> aug(target.size(), std::vector<Q>(n + 1, Q(0)));
    for (std::size_t e = 0; e < target.size(); ++e) {
      for (std::size_t i = 0; i < n; ++i) aug[e][i] = entries(basis[i])[e];
      aug[e][n] = target[e];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t c = 0; c < n && r < aug.size(); ++c) {
      std::size_t piv = r;
      while (piv < aug.size() && is0(aug[piv][c])) ++piv;
      if (piv == aug.size()) continue;
      std::swap(aug[piv], aug[r]);
      Q inv = Q(1) / aug[r][c];
      for (auto& x : aug[r]) x *= inv;
      for (std::size_t i = 0; i < aug.size(); ++i) {
        if (i == r || is0(aug[i][c])) continue;
        Q f = aug[i][c];
        for (std::size_t j = 0; j <= n; ++j) aug[i][j] -= f * aug[r][j];
      }
      pivcol.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < aug.size(); ++i)
      if (!is0(aug[i][n])) throw std::logic_error("product leaves the algebra");
    std::vector<Q> x(n, Q(0));
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = aug[i][n];
    return x;
  }
};

// dim Z^1(A): unknowns d[i][l] with D(e_i) = sum_l d[i][l] e_l; one equation
// per matrix entry of D(e_i e_j) - e_i D(e_j) - D(e_i) e_j.
inline std::size_t derivation_dim(const MatrixAlgebra& a) {
  std::size_t n = a.dim();
  std::size_t k = a.size();
  std::vector<std::vector<Q>> eqs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Q> c = a.coords(mul(a.basis[i], a.basis[j]));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) {
          std::vector<Q> eq(n * n, Q(0));
          for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t t = 0; t < n; ++t) eq[t * n + l] += c[t] * a.basis[l][r][s];
            eq[j * n + l] -= mul(a.basis[i], a.basis[l])[r][s];
            eq[i * n + l] -= mul(a.basis[l], a.basis[j])[r][s];
          }
          eqs.push_back(eq);
        }
    }
  return n * n - rank(eqs);
}

// dim N^1(A): rank of {a -> a x - x a : x in basis} as concrete matrices.
inline std::size_t inner_dim(const MatrixAlgebra& a) {
  std::vector<std::vector<Q>> rows;
  for (const Mat& x : a.basis) {
    std::vector<Q> row;
    for (const Mat& e : a.basis) {
      Mat d = mul(e, x);
      Mat xe = mul(x, e);
      for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t s = 0; s < d.size(); ++s) d[r][s] -= xe[r][s];
      auto v = entries(d);
      row.insert(row.end(), v.begin(), v.end());
    }
    rows.push_back(row);
  }
  return rank(rows);
}

inline std::size_t h1_dim(const MatrixAlgebra& a) { return derivation_dim(a) - inner_dim(a); }

inline MatrixAlgebra m2() { return {{unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)}}; }
inline MatrixAlgebra dual() {
  Mat one = zeros(2);
  one[0][0] = one[1][1] = 1;
  return {{one, unit(2, 0, 1)}};
}
inline MatrixAlgebra rationals() { return {{unit(1, 0, 0)}}; }
inline MatrixAlgebra upper2() { return {{unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 1)}}; }
// Q x Q as diagonal matrices.
inline MatrixAlgebra diag2() { return {{unit(2, 0, 0), unit(2, 1, 1)}}; }

}  // namespace oracle
