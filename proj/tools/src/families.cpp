#include "semidirect/cli/families.hpp"

#include <algorithm>
#include <functional>

namespace semidirect::cli {

std::string_view to_string(ProductFamily f) {
  switch (f) {
    case ProductFamily::Direct: return "direct";
    case ProductFamily::Regular: return "regular";
    case ProductFamily::ThetaLau: return "theta-lau";
    case ProductFamily::ExtensionRegular: return "extension-regular";
    case ProductFamily::ExtensionTheta: return "extension-theta";
    case ProductFamily::Alpha: return "alpha";
    case ProductFamily::Triangular: return "triangular";
    case ProductFamily::Unitization: return "unitization";
  }
  return "?";
}

// splitmix64 keeps neighbouring streams of the same seed uncorrelated.
static std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Generator::Generator(std::uint64_t seed, std::uint64_t stream) : rng_(mix(mix(seed) ^ stream)) {}

// Plain modulo keeps the sequence identical across standard libraries.
std::size_t Generator::below(std::size_t k) { return k == 0 ? 0 : static_cast<std::size_t>(rng_() % k); }

long Generator::between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }

bool Generator::coin(std::size_t one_in) { return below(one_in) == 0; }

Matrix Generator::random_matrix(std::size_t rows, std::size_t cols, long bound) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(between(-bound, bound));
  return m;
}

Matrix Generator::random_invertible(std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(n, n, 2);
    if (rank(m) == n) return m;
  }
}

Subspace Generator::random_subspace(std::size_t ambient, std::size_t max_gens) {
  std::size_t k = below(max_gens + 1);
  Matrix m = random_matrix(k, ambient, 2);
  return Subspace(ambient, m);
}

namespace {

struct Recipe {
  std::string name;
  std::size_t dim;
  std::function<Algebra()> make;
  std::vector<Vector> characters;
};

std::vector<Recipe> simple_recipes() {
  using namespace standard;
  std::vector<Recipe> r;
  r.push_back({"Q", 1, [] { return scalars(); }, {Vector{Rational(1)}}});
  r.push_back({"Q[2]", 1, [] { return scaled_line(Rational(2)); }, {Vector{Rational(2)}}});
  r.push_back({"Q[-1/2]", 1, [] { return scaled_line(Rational(-1, 2)); }, {Vector{Rational(-1, 2)}}});
  r.push_back({"dual", 2, [] { return dual_numbers(); }, {Vector{Rational(1), Rational(0)}}});
  r.push_back({"T2", 3, [] { return upper_triangular(2); },
               {Vector{Rational(1), Rational(0), Rational(0)}, Vector{Rational(0), Rational(0), Rational(1)}}});
  r.push_back({"M2", 4, [] { return matrix_algebra(2); }, {}});
  for (std::size_t m = 1; m <= 4; ++m)
    r.push_back({"null" + std::to_string(m), m, [m] { return null_algebra(m); }, {}});
  for (std::size_t k = 2; k <= 4; ++k) {
    std::vector<Vector> chars{Vector(k, Rational(1))};
    if (k % 2 == 0) {
      Vector alt(k);
      for (std::size_t i = 0; i < k; ++i) alt[i] = Rational(i % 2 == 0 ? 1 : -1);
      chars.push_back(alt);
    }
    r.push_back({"QC" + std::to_string(k), k, [k] { return cyclic_group_algebra(k); }, chars});
  }
  return r;
}

}  // namespace

GeneratedAlgebra Generator::base_algebra(std::size_t min_dim, std::size_t max_dim, bool need_character) {
  static const std::vector<Recipe> recipes = simple_recipes();
  if (max_dim == 0 || min_dim == 0) return GeneratedAlgebra{standard::null_algebra(0), {}, std::nullopt, "null0"};
  auto pick = [&](std::size_t lo, std::size_t hi, bool chars) -> const Recipe& {
    std::vector<const Recipe*> ok;
    for (const Recipe& r : recipes)
      if (r.dim >= lo && r.dim <= hi && (!chars || !r.characters.empty())) ok.push_back(&r);
    return *ok[below(ok.size())];
  };
  auto make = [](const Recipe& r) {
    GeneratedAlgebra g;
    g.algebra = r.make();
    g.recipe = r.name;
    for (std::size_t i = 0; i < r.characters.size(); ++i)
      g.characters.push_back(Character{"theta" + std::to_string(i), r.characters[i]});
    return g;
  };
  std::size_t lo = std::max<std::size_t>(min_dim, 1);
  if (max_dim >= 2 && coin(4)) {
    std::size_t d1 = 1 + below(max_dim - 1);
    const Recipe& left = pick(1, d1, need_character);
    const Recipe& right = pick(1, max_dim - left.dim, false);
    if (left.dim + right.dim >= lo) {
      GeneratedAlgebra a = make(left), b = make(right);
      GeneratedAlgebra g;
      g.algebra = standard::direct_sum(a.algebra, b.algebra);
      g.recipe = a.recipe + "+" + b.recipe;
      std::size_t n = g.algebra.dim;
      for (const Character& c : a.characters) g.characters.push_back(standard::extend_character(c, 0, n));
      for (const Character& c : b.characters) {
        Character e = standard::extend_character(c, a.algebra.dim, n);
        e.name += "'";
        g.characters.push_back(e);
      }
      std::vector<Vector> i1, i2;
      for (std::size_t i = 0; i < a.algebra.dim; ++i) i1.push_back(unit_vector(n, i));
      for (std::size_t i = a.algebra.dim; i < n; ++i) i2.push_back(unit_vector(n, i));
      g.ideal_split = std::make_pair(Subspace::span(n, i1), Subspace::span(n, i2));
      return g;
    }
  }
  return make(pick(lo, max_dim, need_character));
}

void Generator::scramble(GeneratedAlgebra& g) {
  if (g.algebra.dim == 0 || coin(3)) return;
  Matrix p = random_invertible(g.algebra.dim);
  Matrix pinv = *inverse(p);
  std::string name = g.algebra.name;
  g.algebra = change_basis(g.algebra, p);
  g.algebra.name = name + "'";
  for (Character& c : g.characters) c = change_basis(c, p);
  if (g.ideal_split) {
    const std::size_t n = g.algebra.dim;
    g.ideal_split = std::make_pair(Subspace(n, g.ideal_split->first.basis() * pinv),
                                   Subspace(n, g.ideal_split->second.basis() * pinv));
  }
  g.recipe += "'";
}

GeneratedAlgebra Generator::algebra(std::size_t min_dim, std::size_t max_dim) {
  GeneratedAlgebra g = base_algebra(min_dim, max_dim, false);
  scramble(g);
  return g;
}

GeneratedAlgebra Generator::algebra_with_character(std::size_t max_dim) {
  GeneratedAlgebra g = base_algebra(1, std::max<std::size_t>(max_dim, 1), true);
  scramble(g);
  return g;
}

namespace {

// A x B inside the triangular product, as ideals of the A part.
GeneratedAlgebra corner_split(std::size_t na, std::size_t nb) {
  GeneratedAlgebra g;
  std::vector<Vector> i1, i2;
  for (std::size_t i = 0; i < na; ++i) i1.push_back(unit_vector(na + nb, i));
  for (std::size_t i = na; i < na + nb; ++i) i2.push_back(unit_vector(na + nb, i));
  g.ideal_split = std::make_pair(Subspace::span(na + nb, i1), Subspace::span(na + nb, i2));
  return g;
}

}  // namespace

GeneratedInstance Generator::instance(ProductFamily family, std::size_t max_dim) {
  max_dim = std::max<std::size_t>(max_dim, 1);
  GeneratedInstance out;
  out.family = family;
  auto finish = [&](SemidirectAlgebra p, const GeneratedAlgebra& a, std::string recipe) {
    out.product = std::move(p);
    out.ideal_split = a.ideal_split;
    out.recipe = std::string(to_string(family)) + ": " + recipe;
    return out;
  };
  switch (family) {
    case ProductFamily::Direct: {
      GeneratedAlgebra a = algebra(1, max_dim);
      GeneratedAlgebra u = algebra(coin(10) ? 0 : 1, max_dim);
      return finish(direct_product(a.algebra, u.algebra), a, a.recipe + " x " + u.recipe);
    }
    case ProductFamily::Regular: {
      GeneratedAlgebra a = algebra(1, max_dim);
      return finish(semidirect(a.algebra, regular_module(a.algebra)), a, a.recipe + " on itself");
    }
    case ProductFamily::ThetaLau: {
      GeneratedAlgebra a = algebra_with_character(max_dim);
      const Character& t = a.characters[below(a.characters.size())];
      GeneratedAlgebra u = algebra(1, max_dim);
      return finish(theta_lau(a.algebra, u.algebra, t), a, a.recipe + " x|" + t.name + " " + u.recipe);
    }
    case ProductFamily::ExtensionRegular: {
      GeneratedAlgebra a = algebra(1, max_dim);
      return finish(module_extension(a.algebra, regular_action(a.algebra)), a, "T(" + a.recipe + ", regular)");
    }
    case ProductFamily::ExtensionTheta: {
      GeneratedAlgebra a = algebra_with_character(max_dim);
      const Character& t = a.characters[below(a.characters.size())];
      std::size_t m = 1 + below(max_dim);
      std::size_t mode = below(3);  // both sides, left only, right only
      BimoduleAction act(a.algebra.dim, m);
      for (std::size_t i = 0; i < a.algebra.dim; ++i)
        for (std::size_t q = 0; q < m; ++q) {
          if (mode != 2) act.left(i, q, q) = t.values[i];
          if (mode != 1) act.right(q, i, q) = t.values[i];
        }
      static const char* modes[] = {"both", "left", "right"};
      return finish(module_extension(a.algebra, act), a,
                    "T(" + a.recipe + ", Q^" + std::to_string(m) + " " + t.name + " " + modes[mode] + ")");
    }
    case ProductFamily::Alpha: {
      std::size_t mode = below(3);
      if (mode == 0) {
        GeneratedAlgebra a = algebra(1, max_dim);
        Algebra u = a.algebra;
        u.name += "#";
        return finish(alpha_product(a.algebra, u, Matrix::identity(a.algebra.dim)), a, a.recipe + " alpha=id");
      }
      if (mode == 1) {
        GeneratedAlgebra a = algebra(1, max_dim);
        GeneratedAlgebra u = algebra(1, max_dim);
        return finish(alpha_product(a.algebra, u.algebra, Matrix(a.algebra.dim, u.algebra.dim)), a,
                      a.recipe + " x| " + u.recipe + " alpha=0");
      }
      GeneratedAlgebra a = algebra_with_character(max_dim);
      const Character& t = a.characters[below(a.characters.size())];
      Matrix alpha(a.algebra.dim, 1);
      for (std::size_t i = 0; i < a.algebra.dim; ++i) alpha(i, 0) = t.values[i];
      return finish(alpha_product(a.algebra, standard::scalars(), alpha), a, a.recipe + " alpha=" + t.name);
    }
    case ProductFamily::Triangular: {
      if (max_dim < 2) return instance(ProductFamily::Regular, max_dim);
      if (coin(2)) {
        GeneratedAlgebra a = algebra(1, max_dim / 2);
        const Algebra& b = a.algebra;
        const std::size_t n = b.dim;
        CornerBimodule m(n, n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              m.left(i, p, q) = b.mult(i, p, q);
              m.right(p, i, q) = b.mult(p, i, q);
            }
        return finish(triangular(a.algebra, b, m), corner_split(n, n), "Tri(" + a.recipe + ", regular, same)");
      }
      GeneratedAlgebra a = algebra_with_character(max_dim - 1);
      GeneratedAlgebra b = algebra_with_character(max_dim - a.algebra.dim);
      const Character& ta = a.characters[below(a.characters.size())];
      const Character& tb = b.characters[below(b.characters.size())];
      std::size_t k = 1 + below(max_dim);
      CornerBimodule m(a.algebra.dim, b.algebra.dim, k);
      for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t i = 0; i < a.algebra.dim; ++i) m.left(i, p, p) = ta.values[i];
        for (std::size_t j = 0; j < b.algebra.dim; ++j) m.right(p, j, p) = tb.values[j];
      }
      return finish(triangular(a.algebra, b.algebra, m), corner_split(a.algebra.dim, b.algebra.dim),
                    "Tri(" + a.recipe + ", Q^" + std::to_string(k) + ", " + b.recipe + ")");
    }
    case ProductFamily::Unitization: {
      GeneratedAlgebra u = algebra(coin(10) ? 0 : 1, max_dim);
      GeneratedAlgebra none;
      return finish(unitization(u.algebra), none, "Q x| " + u.recipe);
    }
  }
  return out;
}

}  // namespace semidirect::cli
