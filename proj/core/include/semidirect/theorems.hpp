#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semidirect/derivations.hpp"
#include "semidirect/products.hpp"

namespace semidirect {

/// A named yes/no fact with a human-readable witness when it fails.
struct Check {
  std::string name;
  bool holds = true;
  std::string witness;
};

/// Corner maps of D on A x| U: D((a, x)) = (d1(a) + t1(x), d2(a) + t2(x)).
struct BlockDecomposition {
  Matrix delta1;  // A -> A
  Matrix delta2;  // A -> U
  Matrix tau1;    // U -> A
  Matrix tau2;    // U -> U
  std::vector<Check> condition_report;

  bool all_conditions_hold() const;
};

BlockDecomposition split_blocks(const Matrix& d, const SemidirectAlgebra& p);
Matrix reassemble(const BlockDecomposition& b);

/// Conditions (a)-(d) of the block criterion as linear equations on D.
/// Ids: a, b, c-hom, c-xy, d-left, d-right, d-xy.
const std::vector<std::string>& block_condition_ids();
/// Maps on A x| U (flattened) satisfying one block condition.
Subspace block_condition_space(const SemidirectAlgebra& p, std::string_view id);
/// Intersection of every block condition space.
Subspace block_criterion_space(const SemidirectAlgebra& p);

enum class Verdict { Verified, HypothesesNotMet, Mismatch };
std::string_view to_string(Verdict v);

struct TheoremReport {
  std::string theorem_id;
  std::vector<Check> hypotheses;
  std::vector<Check> claims;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  Verdict verdict = Verdict::Verified;
  std::string instance;

  /// Sets the verdict from hypotheses, claims and the two dimensions.
  void decide();
  const Check* first_failed_hypothesis() const;
};

bool is_derivation_via_3_1(const Matrix& d, const SemidirectAlgebra& p);
/// Compares the Leibniz kernel of the total algebra with the block criterion space.
TheoremReport theorem_3_1_equivalence(const SemidirectAlgebra& p);

struct InnerPair {
  Vector a0;
  Vector x0;
};
/// Solves D = id_{(a0, x0)} and checks the resulting block shape.
/// Throws NotADerivation when d is not a derivation of A x| U.
std::optional<InnerPair> inner_characterization(const Matrix& d, const SemidirectAlgebra& p);
/// id_{(a0, x0)} on A x| U.
Matrix total_inner_map(const InnerPair& w, const SemidirectAlgebra& p);

enum class SingleBlock { Delta1, Delta2, Tau1, Tau2 };
std::optional<SingleBlock> parse_single_block(std::string_view s);
std::string_view to_string(SingleBlock k);
Matrix embed_block(SingleBlock kind, const Matrix& block, const SemidirectAlgebra& p);
/// Single-block criterion for the embedded map; throws InternalInvariantViolation
/// if it disagrees with is_derivation_via_3_1.
bool corollary_3_2_check(SingleBlock kind, const Matrix& block, const SemidirectAlgebra& p);

bool tau1_vanishes(const SemidirectAlgebra& p);

/// Known names: tau1-vanishes, derA-in-annAU, derAU-in-annUU, h1A-zero,
/// h1AU-zero, homz1-in-r+n1, annUU-zero-or-A2=A, annAA-zero-or-U2=U,
/// derA-in-ker-theta, no-hom-T.
const std::vector<std::string>& hypothesis_names();
Check hypothesis_check(std::string_view name, const SemidirectAlgebra& p);

/// Hom_A(U) intersected with Z^1(U), flattened m x m.
Subspace hom_derivations(const SemidirectAlgebra& p);

Subspace build_E(const SemidirectAlgebra& p);
Subspace build_F(const SemidirectAlgebra& p);
Subspace build_K(const SemidirectAlgebra& p);

/// id in {4.1, 4.2, 4.3, 4.4}.
TheoremReport verify_theorem(std::string_view id, const SemidirectAlgebra& p);
/// id in {5.1, 5.3, 5.4, ttd, cte, lau-der, a1, prop10, embed}. Throws
/// WrongConstructionKind when p was not built by the matching construction.
TheoremReport verify_special_case(std::string_view id, const SemidirectAlgebra& p);
/// Any id above or 3.1; throws UnknownHypothesis for anything else.
TheoremReport verify(std::string_view id, const SemidirectAlgebra& p);
const std::vector<std::string>& theorem_ids();

}  // namespace semidirect
