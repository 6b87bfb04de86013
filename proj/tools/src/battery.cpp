#include "semidirect/cli/battery.hpp"

#include <algorithm>
#include <functional>

namespace semidirect::cli {

std::size_t BatteryResult::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.holds; }));
}

std::vector<std::string> applicable_theorems(const SemidirectAlgebra& p) {
  std::vector<std::string> ids = {"3.1", "4.1", "4.2", "4.3", "4.4"};
  switch (p.kind) {
    case ConstructionKind::Direct: ids.insert(ids.end(), {"5.1", "5.3"}); break;
    case ConstructionKind::Alpha: ids.push_back("5.4"); break;
    case ConstructionKind::ModuleExtension:
    case ConstructionKind::Triangular: ids.insert(ids.end(), {"ttd", "cte", "embed"}); break;
    case ConstructionKind::ThetaLau:
    case ConstructionKind::Unitization: ids.insert(ids.end(), {"lau-der", "a1", "prop10"}); break;
    case ConstructionKind::Semidirect: break;
  }
  return ids;
}

namespace {

class Battery {
 public:
  Battery(const GeneratedInstance& inst, Generator& g)
      : inst_(inst), p_(inst.product), a_(p_.part_a), u_(p_.part_u), g_(g) {}

  BatteryResult run() {
    guarded("structure", [&] { structure(); });
    guarded("annihilators", [&] { annihilators(); });
    guarded("linear algebra", [&] { linear_algebra(); });
    guarded("inner derivations", [&] { inner_inclusions(); });
    guarded("r maps", [&] { r_remarks(); });
    guarded("inner maps on U", [&] { inner_remarks(); });
    guarded("inclusion chain", [&] { chain(); });
    guarded("special subspaces", [&] { special_subspaces(); });
    guarded("ideal split", [&] { ideal_split(); });
    guarded("blocks", [&] { blocks(); });
    guarded("single blocks", [&] { single_blocks(); });
    for (const std::string& id : applicable_theorems(p_)) guarded("verify " + id, [&] { theorem(id); });
    return std::move(out_);
  }

 private:
  void check(std::string name, bool ok, std::string witness = "") {
    out_.checks.push_back(Check{std::move(name), ok, ok ? "" : std::move(witness)});
  }

  void guarded(const std::string& what, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(what + " raised", false, e.what());
    }
  }

  Vector random_vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = Rational(g_.between(-2, 2));
    return v;
  }

  // {v : v m in s}, for the row-convention map m.
  static Subspace preimage(const Matrix& m, const Subspace& s) {
    Subspace pairs = left_kernel(vstack(m, s.basis()));
    std::vector<Vector> out;
    for (std::size_t k = 0; k < pairs.dim(); ++k) {
      Vector v = pairs.basis_vector(k);
      out.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m.rows()));
    }
    return Subspace::span(m.rows(), out);
  }

  void structure() {
    check("A x| U is associative", validate_algebra(p_.total).ok(), validate_algebra(p_.total).summary());
    check("U is a compatible A-module algebra", validate_module(a_, u_).ok(), validate_module(a_, u_).summary());
    check("(A x| U)/U recovers A", quotient_by_module_block(p_) == a_);
    check("A is a subalgebra", a_block_closed(p_));
    check("U is an ideal", u_block_is_ideal(p_));
    check("commutative iff A, U commutative and the action symmetric",
          is_commutative(p_.total) ==
              (is_commutative(a_) && is_commutative(u_.algebra) && is_symmetric(u_.action)));
    if (p_.kind == ConstructionKind::ModuleExtension || p_.kind == ConstructionKind::Triangular)
      check("module extension has U^2 = 0", u_.algebra.mult.is_zero());
    if (p_.kind == ConstructionKind::Direct)
      check("direct product has zero actions", u_.action.left.is_zero() && u_.action.right.is_zero());
  }

  // Smallest sub-bimodule of U containing v.
  Subspace generated_submodule(const Vector& v) const {
    Subspace s = Subspace::span(u_.dim(), {v});
    for (;;) {
      std::vector<Vector> gens;
      for (std::size_t k = 0; k < s.dim(); ++k) {
        gens.push_back(s.basis_vector(k));
        for (std::size_t i = 0; i < a_.dim; ++i) {
          gens.push_back(u_.action.act_left(unit_vector(a_.dim, i), s.basis_vector(k)));
          gens.push_back(u_.action.act_right(s.basis_vector(k), unit_vector(a_.dim, i)));
        }
      }
      Subspace next = Subspace::span(u_.dim(), gens);
      if (next == s) return s;
      s = next;
    }
  }

  void annihilators() {
    Subspace ann = annihilator_in_algebra(a_, u_.action);
    check("ann_A U is an ideal", is_ideal(a_, ann));
    check("(0 : U) = ann_A U", relative_annihilator(Subspace::zero(u_.dim()), u_.action) == ann);
    check("(U : U) = A", relative_annihilator(Subspace::full(u_.dim()), u_.action).dim() == a_.dim);
    if (u_.dim() == 0) return;
    Subspace n = generated_submodule(random_vector(u_.dim()));
    Subspace big = sum(n, generated_submodule(random_vector(u_.dim())));
    check("(N : U) is antitone in N",
          relative_annihilator(big, u_.action).contains(relative_annihilator(n, u_.action)));
  }

  void linear_algebra() {
    std::size_t r = 1 + g_.below(4), c = 1 + g_.below(4);
    Matrix m = g_.random_matrix(r, c, 2);
    if (g_.coin(3) && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j);  // force a dependency
    std::size_t rk = rank(m);
    check("rank + nullity = columns", rk + kernel(m).dim() == c);
    check("rank + left nullity = rows", rk + left_kernel(m).dim() == r);
    check("column and row ranks agree", image(m).dim() == rk && row_space(m).dim() == rk);
    std::size_t d = 1 + g_.below(4);
    Subspace x = g_.random_subspace(d, 3), y = g_.random_subspace(d, 3), z = g_.random_subspace(d, 3);
    check("dim(X+Y) + dim(X cap Y) = dim X + dim Y",
          sum(x, y).dim() + intersect(x, y).dim() == x.dim() + y.dim());
    Subspace xz = intersect(x, z);
    check("modular law", intersect(sum(xz, y), z) == sum(xz, intersect(y, z)));
    check("sum and intersection commute", sum(x, y) == sum(y, x) && intersect(x, y) == intersect(y, x));
    check("sum and intersection associate", sum(sum(x, y), z) == sum(x, sum(y, z)) &&
                                                intersect(intersect(x, y), z) == intersect(x, intersect(y, z)));
    check("rref is idempotent", rref(rref(m)) == rref(m));
  }

  void inner_inclusions() {
    auto incl = [&](const std::string& what, const LinearMapSpace& z, const LinearMapSpace& b) {
      check("N1 in Z1 " + what, z.space.contains(b.space));
    };
    incl("(A)", derivation_space(a_), inner_space(a_));
    incl("(U)", derivation_space(u_.algebra), inner_space(u_.algebra));
    incl("(A,U)", derivation_space(a_, u_.action), inner_space(a_, u_.action));
    incl("(A x| U)", derivation_space(p_.total), inner_space(p_.total));
  }

  void r_remarks() {
    const std::size_t n = a_.dim, m = u_.dim();
    LinearMapSpace z = derivation_space(u_.algebra);
    check("R_A(U) in Z1(U)", z.space.contains(r_space(a_, u_).space));
    BimoduleAction reg = regular_action(a_);
    bool left = true, right = true;
    for (std::size_t i = 0; i < n; ++i) {
      Vector ai = unit_vector(n, i);
      Matrix ra = r_map(ai, u_.action);
      Matrix ida = inner_map(ai, reg);
      for (std::size_t j = 0; j < n; ++j) {
        Vector b = unit_vector(n, j);
        Vector idab = b * ida;
        for (std::size_t q = 0; q < m; ++q) {
          Vector x = unit_vector(m, q);
          left = left && u_.action.act_left(b, x) * ra ==
                             u_.action.act_left(b, x * ra) + u_.action.act_left(idab, x);
          right = right && u_.action.act_right(x, b) * ra ==
                               u_.action.act_right(x * ra, b) + u_.action.act_right(x, idab);
        }
      }
    }
    check("r_a(bx) = b r_a(x) + id_a(b) x", left);
    check("r_a(xb) = r_a(x) b + x id_a(b)", right);
    Subspace hom = hom_space(u_.action, u_.action).space;
    check("C_A(U) in Hom cap R", intersect(hom, r_space(a_, u_).space).contains(c_space(a_, u_).space));
    if (annihilator_in_algebra(a_, u_.action).dim() == 0) {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < n; ++i) rows.push_back(flatten(r_map(unit_vector(n, i), u_.action)));
      Subspace s = preimage(Matrix::from_rows(rows, m * m), hom);
      check("ann_A U = 0: r_a in Hom forces id_a = 0", center(a_).contains(s));
    }
  }

  void inner_remarks() {
    const std::size_t n = a_.dim, m = u_.dim();
    bool left = true, right = true;
    for (std::size_t k = 0; k < m; ++k) {
      Vector x0 = unit_vector(m, k);
      Matrix idu = module_inner_map(x0, u_.algebra);
      Matrix ida = inner_map(x0, u_.action);
      for (std::size_t i = 0; i < n; ++i) {
        Vector a = unit_vector(n, i);
        Vector idax = a * ida;
        for (std::size_t q = 0; q < m; ++q) {
          Vector x = unit_vector(m, q);
          left = left && u_.action.act_left(a, x) * idu ==
                             u_.action.act_left(a, x * idu) + u_.algebra.multiply(idax, x);
          right = right && u_.action.act_right(x, a) * idu ==
                               u_.action.act_right(x * idu, a) + u_.algebra.multiply(x, idax);
        }
      }
    }
    check("id_U,x0(ax) = a id_U,x0(x) + id_A,x0(a) x", left);
    check("id_U,x0(xa) = id_U,x0(x) a + x id_A,x0(a)", right);
    Subspace hom = hom_space(u_.action, u_.action).space;
    check("I(U) in Hom cap N1(U)", intersect(hom, inner_space(u_.algebra).space).contains(i_space(a_, u_).space));
    if (annihilator_in_module(u_).dim() == 0) {
      std::vector<Vector> rows;
      for (std::size_t q = 0; q < m; ++q) rows.push_back(flatten(module_inner_map(unit_vector(m, q), u_.algebra)));
      Subspace s = preimage(Matrix::from_rows(rows, m * m), hom);
      check("ann_U U = 0: id_U,x in Hom forces id_A,x = 0", action_centralizer(u_.action).contains(s));
    }
  }

  void chain() {
    Subspace hom = hom_space(u_.action, u_.action).space;
    Subspace ci = sum(c_space(a_, u_).space, i_space(a_, u_).space);
    Subspace mid = intersect(hom, sum(r_space(a_, u_).space, inner_space(u_.algebra).space));
    Subspace top = intersect(hom, derivation_space(u_.algebra).space);
    check("C + I in Hom cap (R + N1)", mid.contains(ci));
    check("Hom cap (R + N1) in Hom cap Z1", top.contains(mid));
  }

  void special_subspaces() {
    const std::size_t m = u_.dim();
    if (is_commutative(a_)) check("A commutative: R = C", r_space(a_, u_).space == c_space(a_, u_).space);
    if (is_symmetric(u_.action))
      check("U commutative bimodule: N1(U) = I(U)", inner_space(u_.algebra).space == i_space(a_, u_).space);
    if (u_.algebra.mult.is_zero()) {
      check("U^2 = 0: Z1(U) is every map", derivation_space(u_.algebra).dim() == m * m);
      check("U^2 = 0: N1(U) = I(U) = 0", inner_space(u_.algebra).dim() == 0 && i_space(a_, u_).dim() == 0);
    }
    if (p_.theta) {
      check("theta action: R = C = 0", r_space(a_, u_).dim() == 0 && c_space(a_, u_).dim() == 0);
    }
  }

  bool kills(const Subspace& ideal, bool on_left) const {
    for (std::size_t k = 0; k < ideal.dim(); ++k)
      for (std::size_t q = 0; q < u_.dim(); ++q) {
        Vector x = unit_vector(u_.dim(), q);
        Vector v = on_left ? u_.action.act_left(ideal.basis_vector(k), x)
                           : u_.action.act_right(x, ideal.basis_vector(k));
        if (!is_zero(v)) return false;
      }
    return true;
  }

  void ideal_split() {
    if (!inst_.ideal_split) return;
    const auto& [i1, i2] = *inst_.ideal_split;
    check("recorded split is a direct sum of ideals",
          is_ideal(a_, i1) && is_ideal(a_, i2) && sum(i1, i2).dim() == a_.dim && intersect(i1, i2).dim() == 0);
    bool spans = left_action_span(u_.action).dim() == u_.dim() || right_action_span(u_.action).dim() == u_.dim();
    for (int orient = 0; orient < 2; ++orient) {
      const Subspace& first = orient == 0 ? i1 : i2;
      const Subspace& second = orient == 0 ? i2 : i1;
      if (spans && kills(second, true) && kills(first, false))
        check("split ideals with I2 U = U I1 = 0 force U^2 = 0", square_span(u_.algebra).dim() == 0);
    }
  }

  void blocks() {
    const std::size_t N = p_.n() + p_.m();
    Matrix d = g_.random_matrix(N, N, 3);
    check("split then reassemble is the identity", reassemble(split_blocks(d, p_)) == d);
    InnerPair w{random_vector(p_.n()), random_vector(p_.m())};
    Matrix inner = total_inner_map(w, p_);
    std::optional<InnerPair> back = inner_characterization(inner, p_);
    check("inner derivations are recognised", back.has_value() && total_inner_map(*back, p_) == inner);
    check("inner derivations pass the block criterion", is_derivation_via_3_1(inner, p_));
  }

  void single_blocks() {
    LinearMapSpace za = derivation_space(a_);
    for (std::size_t k = 0; k < za.dim(); ++k) corollary_3_2_check(SingleBlock::Delta1, za.basis_map(k), p_);
    LinearMapSpace zau = derivation_space(a_, u_.action);
    for (std::size_t k = 0; k < zau.dim(); ++k) corollary_3_2_check(SingleBlock::Delta2, zau.basis_map(k), p_);
    LinearMapSpace t1 = hom_space(u_.action, regular_action(a_));
    for (std::size_t k = 0; k < t1.dim(); ++k) corollary_3_2_check(SingleBlock::Tau1, t1.basis_map(k), p_);
    Subspace hz = hom_derivations(p_);
    bool all = true;
    for (std::size_t k = 0; k < hz.dim(); ++k)
      all = all && corollary_3_2_check(SingleBlock::Tau2, unflatten(hz.basis_vector(k), u_.dim(), u_.dim()), p_);
    check("Hom cap Z1(U) embeds as tau2-only derivations", all);
    check("single-block criteria agree with the block criterion", true);
  }

  void theorem(const std::string& id) {
    TheoremReport r = verify(id, p_);
    check("verify " + id + " is not MISMATCH", r.verdict != Verdict::Mismatch,
          "lhs " + std::to_string(r.lhs_dim) + ", rhs " + std::to_string(r.rhs_dim));
    out_.reports.push_back(std::move(r));
  }

  const GeneratedInstance& inst_;
  const SemidirectAlgebra& p_;
  const Algebra& a_;
  const ModuleAlgebra& u_;
  Generator& g_;
  BatteryResult out_;
};

}  // namespace

BatteryResult run_battery(const GeneratedInstance& inst, Generator& g) { return Battery(inst, g).run(); }

}  // namespace semidirect::cli
