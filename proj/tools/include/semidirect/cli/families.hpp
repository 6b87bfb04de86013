#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "semidirect/semidirect.hpp"

namespace semidirect::cli {

/// Random algebras come from known-valid families followed by a random
/// invertible change of basis, never from raw random tensors.
struct GeneratedAlgebra {
  Algebra algebra;
  std::vector<Character> characters;
  /// Ideals I1, I2 with A = I1 + I2 when the algebra was built as a direct sum.
  std::optional<std::pair<Subspace, Subspace>> ideal_split;
  std::string recipe;
};

enum class ProductFamily { Direct, Regular, ThetaLau, ExtensionRegular, ExtensionTheta, Alpha, Triangular, Unitization };
inline constexpr std::size_t product_family_count = 8;

std::string_view to_string(ProductFamily f);

struct GeneratedInstance {
  SemidirectAlgebra product;
  ProductFamily family = ProductFamily::Direct;
  std::optional<std::pair<Subspace, Subspace>> ideal_split;  // of the A part
  std::string recipe;
};

class Generator {
 public:
  Generator(std::uint64_t seed, std::uint64_t stream);

  std::size_t below(std::size_t k);
  long between(long lo, long hi);
  bool coin(std::size_t one_in);

  /// Algebra of dimension in [min_dim, max_dim]; min_dim = 0 yields the zero algebra.
  GeneratedAlgebra algebra(std::size_t min_dim, std::size_t max_dim);
  /// Algebra carrying at least one character.
  GeneratedAlgebra algebra_with_character(std::size_t max_dim);
  /// Product of the given family with dim A, dim U <= max_dim.
  GeneratedInstance instance(ProductFamily family, std::size_t max_dim);

  Matrix random_matrix(std::size_t rows, std::size_t cols, long bound);
  Matrix random_invertible(std::size_t n);
  Subspace random_subspace(std::size_t ambient, std::size_t max_gens);

 private:
  GeneratedAlgebra base_algebra(std::size_t min_dim, std::size_t max_dim, bool need_character);
  void scramble(GeneratedAlgebra& g);

  std::mt19937_64 rng_;
};

}  // namespace semidirect::cli
