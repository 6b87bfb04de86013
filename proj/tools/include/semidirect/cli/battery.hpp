#pragma once

#include <vector>

#include "semidirect/cli/families.hpp"

namespace semidirect::cli {

struct BatteryResult {
  std::vector<Check> checks;
  std::vector<TheoremReport> reports;

  std::size_t failures() const;
};

/// Verifier ids whose construction requirements `p` meets, 3.1 first.
std::vector<std::string> applicable_theorems(const SemidirectAlgebra& p);

/// Every invariant that applies to the instance. Conditional remarks only
/// contribute a check when their hypothesis holds. `g` supplies the random
/// matrices, subspaces and elements used by the sampled checks.
BatteryResult run_battery(const GeneratedInstance& inst, Generator& g);

}  // namespace semidirect::cli
