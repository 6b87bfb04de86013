#include "semidirect/standard_algebras.hpp"

#include <string>
#include <vector>

namespace semidirect::standard {

Algebra scalars() { return scaled_line(Rational(1)); }

Algebra scaled_line(const Rational& factor) {
  Algebra a(factor == Rational(1) ? "Q" : "Q[" + factor.str() + "]", 1);
  a.mult(0, 0, 0) = factor;
  return a;
}

Algebra matrix_algebra(std::size_t k) {
  Algebra a("M" + std::to_string(k), k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t t = 0; t < k; ++t) a.mult(r * k + s, s * k + t, r * k + t) = Rational(1);
  return a;
}

Algebra dual_numbers() {
  Algebra a("dual", 2);
  a.mult(0, 0, 0) = Rational(1);
  a.mult(0, 1, 1) = Rational(1);
  a.mult(1, 0, 1) = Rational(1);
  return a;
}

Algebra null_algebra(std::size_t m) { return Algebra("null" + std::to_string(m), m); }

Algebra upper_triangular(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = r; s < k; ++s) units.emplace_back(r, s);
  auto index = [&](std::size_t r, std::size_t s) {
    for (std::size_t i = 0; i < units.size(); ++i)
      if (units[i] == std::pair{r, s}) return i;
    return units.size();
  };
  Algebra a("T" + std::to_string(k), units.size());
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j)
      if (units[i].second == units[j].first) a.mult(i, j, index(units[i].first, units[j].second)) = Rational(1);
  return a;
}

Algebra cyclic_group_algebra(std::size_t k) {
  Algebra a("QC" + std::to_string(k), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a.mult(i, j, (i + j) % k) = Rational(1);
  return a;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  Algebra s(a.name + "x" + b.name, a.dim + b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) s.mult(i, j, k) = a.mult(i, j, k);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k) s.mult(a.dim + i, a.dim + j, a.dim + k) = b.mult(i, j, k);
  return s;
}

Character extend_character(const Character& t, std::size_t offset, std::size_t total_dim) {
  Character out{t.name, Vector(total_dim)};
  for (std::size_t i = 0; i < t.values.size(); ++i) out.values[offset + i] = t.values[i];
  return out;
}

}  // namespace semidirect::standard
