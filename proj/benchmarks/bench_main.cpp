#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "semidirect/semidirect.hpp"

using namespace semidirect;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> d(-3, 3);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(d(rng));
  return m;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (inverse(m)) return m;
  }
}

// More distinct inputs than the library keeps memoized, so every call recomputes.
constexpr std::size_t kRotation = 96;

std::vector<SemidirectAlgebra> m2_products() {
  std::mt19937_64 rng(42);
  Algebra m2 = standard::matrix_algebra(2);
  std::vector<SemidirectAlgebra> out;
  for (std::size_t i = 0; i < kRotation; ++i) out.push_back(direct_product(m2, change_basis(m2, random_invertible(rng, 4))));
  return out;
}

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  Matrix m = random_matrix(rng, n, n + 2);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_DerivationSpaceM2xM2(benchmark::State& state) {
  static const std::vector<SemidirectAlgebra> products = m2_products();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivation_space(products[i].total));
    i = (i + 1) % products.size();
  }
}
BENCHMARK(BM_DerivationSpaceM2xM2)->Unit(benchmark::kMillisecond);

void BM_Theorem31Equivalence(benchmark::State& state) {
  static const std::vector<SemidirectAlgebra> products = m2_products();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(theorem_3_1_equivalence(products[i]));
    i = (i + 1) % products.size();
  }
}
BENCHMARK(BM_Theorem31Equivalence)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
