#pragma once

#include <initializer_list>
#include <random>

#include <gtest/gtest.h>

#include "semidirect/semidirect.hpp"

namespace testing_helpers {

using namespace semidirect;

inline Vector V(std::initializer_list<Rational> xs) { return Vector(xs); }

inline Matrix M(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Vector> r;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    r.emplace_back(row);
    cols = row.size();
  }
  return Matrix::from_rows(r, cols);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(d(rng));
  return m;
}

inline Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient, std::size_t gens) {
  return Subspace(ambient, random_matrix(rng, gens, ambient, 2));
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace testing_helpers
