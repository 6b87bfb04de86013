// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "semidirect/cli/families.hpp"
#include "semidirect/cli/selftest.hpp"
#include "semidirect/semidirect.hpp"

using namespace semidirect;
using namespace semidirect::cli;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (pass) detail << "; failed: ";
      else detail << ", ";
      detail << what;
      pass = false;
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str());
  std::fflush(stdout);
}

GeneratedInstance generated(std::uint64_t seed, std::size_t index, std::size_t max_dim) {
  Generator g(seed, index);
  return g.instance(static_cast<ProductFamily>(index % product_family_count), max_dim);
}

std::size_t mismatches_seen = 0;
std::size_t verdicts_seen = 0;

void tally(const TheoremReport& r) {
  ++verdicts_seen;
  if (r.verdict == Verdict::Mismatch) ++mismatches_seen;
}

void criterion_1(Outcome& o) {
  auto t0 = Clock::now();
  std::size_t equal = 0, total = 0, families = 0;
  std::vector<bool> seen(product_family_count, false);
  for (std::size_t i = 0; i < 240; ++i) {
    GeneratedInstance inst = generated(1, i, 3);
    o.require(inst.product.n() <= 3 && inst.product.m() <= 3, "instance " + std::to_string(i) + " too large");
    Subspace leibniz = derivation_space(inst.product.total).space;
    Subspace criterion = block_criterion_space(inst.product);
    TheoremReport r = theorem_3_1_equivalence(inst.product);
    tally(r);
    ++total;
    if (leibniz == criterion && r.verdict == Verdict::Verified) ++equal;
    else o.require(false, "instance " + std::to_string(i) + " (" + inst.recipe + ")");
    if (!seen[i % product_family_count]) ++families, seen[i % product_family_count] = true;
  }
  double s = seconds_since(t0);
  o.detail << " (" << equal << "/" << total << " bit-equal over " << families << " families, " << s << " s)";
  o.require(total >= 200, "fewer than 200 instances");
  o.require(families == product_family_count, "not every family generated");
  o.require(s < 20.0, "over the 20 s budget");
}

void criterion_2(Outcome& o) {
  struct Case {
    const char* name;
    oracle::MatrixAlgebra concrete;
    Algebra lib;
    std::size_t frozen;
  };
  // Frozen from the brute-force oracle before the library existed.
  std::vector<Case> cases = {{"M2", oracle::m2(), standard::matrix_algebra(2), 0},
                             {"dual", oracle::dual(), standard::dual_numbers(), 1},
                             {"Q", oracle::rationals(), standard::scalars(), 0},
                             {"T2", oracle::upper2(), standard::upper_triangular(2), 0}};
  for (const Case& c : cases) {
    std::size_t o_val = oracle::h1_dim(c.concrete), lib = h1_dim(c.lib);
    o.detail << (o.detail.tellp() ? ", " : " (") << c.name << "=" << lib;
    o.require(o_val == c.frozen, std::string(c.name) + " oracle drifted");
    o.require(lib == c.frozen, std::string(c.name) + " library disagrees");
  }
  o.detail << ")";
}

void criterion_3(Outcome& o) {
  std::size_t direct = 0, gated41 = 0, gated53 = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (std::size_t i = 0; i < 200; ++i) {
      Generator g(seed, 1000 + i);
      GeneratedInstance inst = g.instance(ProductFamily::Direct, 3);
      const SemidirectAlgebra& p = inst.product;
      ++direct;
      TheoremReport r = verify_theorem("4.1", p);
      tally(r);
      if (r.verdict == Verdict::Verified) {
        ++gated41;
        o.require(r.lhs_dim == r.rhs_dim, "4.1 on " + inst.recipe);
        o.require(r.lhs_dim == h1_dim(p.total), "4.1 lhs is not h1 on " + inst.recipe);
      }
      o.require(r.verdict != Verdict::Mismatch, "4.1 MISMATCH on " + inst.recipe);
      TheoremReport s = verify_special_case("5.3", p);
      tally(s);
      if (s.verdict == Verdict::Verified) {
        ++gated53;
        o.require(h1_dim(p.total) == h1_dim(p.part_a) + h1_dim(p.part_u.algebra), "5.3 on " + inst.recipe);
      }
      o.require(s.verdict != Verdict::Mismatch, "5.3 MISMATCH on " + inst.recipe);
    }
  }
  // Known gated instances on top of the random ones.
  Algebra q = standard::scalars(), m2 = standard::matrix_algebra(2);
  TheoremReport known = verify_theorem("4.1", direct_product(standard::direct_sum(q, q), m2));
  tally(known);
  o.require(known.verdict == Verdict::Verified && known.lhs_dim == 0 && known.rhs_dim == 0, "(QxQ)xM2");
  o.detail << " (" << direct << " direct products; 4.1 gates passed on " << gated41 << ", 5.3 gates on " << gated53
           << ")";
  o.require(gated41 > 0, "no instance passed the 4.1 gates");
  o.require(gated53 > 0, "no instance passed the 5.3 gates");
}

void criterion_4(Outcome& o) {
  SemidirectAlgebra p = theta_lau(standard::scalars(), standard::null_algebra(1), {"one", {Rational(1)}});
  TheoremReport r = verify_theorem("4.4", p);
  tally(r);
  o.detail << " (verdict " << to_string(r.verdict) << ", lhs " << r.lhs_dim << ", rhs " << r.rhs_dim << ")";
  o.require(r.verdict == Verdict::Verified, "not verified");
  o.require(r.lhs_dim == 1 && r.rhs_dim == 1, "dims are not 1/1");
  o.require(oracle::h1_dim(oracle::dual()) == r.lhs_dim, "oracle disagrees");
}

void criterion_5(Outcome& o) {
  Algebra q = standard::scalars();
  SemidirectAlgebra t = module_extension(q, regular_action(q));
  std::size_t h_t = h1_dim(t.total), h_qq = h1_dim(q, regular_action(q));
  std::size_t quot = quotient_dim(hom_space(t.part_u.action, t.part_u.action).space, c_space(q, t.part_u).space);
  TheoremReport r = verify_special_case("cte", t);
  tally(r);
  o.detail << " (h1(T) " << h_t << " = " << h_qq << " + " << quot << ", verdict " << to_string(r.verdict) << ")";
  o.require(h_t == 1 && h_qq == 0 && quot == 1, "dimensions");
  o.require(r.verdict == Verdict::Verified && r.lhs_dim == 1 && r.rhs_dim == 1, "cte report");
}

// phi(b_s b_t) == phi(b_s) phi(b_t) for every basis pair, multiplied out by hand.
bool transports(const Matrix& phi, const Algebra& from, const Algebra& to) {
  for (std::size_t s = 0; s < from.dim; ++s)
    for (std::size_t t = 0; t < from.dim; ++t) {
      Vector lhs = from.basis_product(s, t) * phi;
      Vector rhs(to.dim);
      for (std::size_t i = 0; i < to.dim; ++i)
        for (std::size_t j = 0; j < to.dim; ++j) {
          Rational c = phi(s, i) * phi(t, j);
          if (c.is_zero()) continue;
          for (std::size_t k = 0; k < to.dim; ++k) rhs[k] += c * to.mult(i, j, k);
        }
      if (lhs != rhs) return false;
    }
  return true;
}

void criterion_6(Outcome& o) {
  Algebra q = standard::scalars(), m2 = standard::matrix_algebra(2);
  struct Case {
    const char* name;
    Algebra a;
    Matrix alpha;
  };
  std::vector<Case> cases = {{"0 on Q", q, Matrix(1, 1)}, {"id on Q", q, Matrix::identity(1)},
                             {"id on M2", m2, Matrix::identity(4)}};
  for (const Case& c : cases) {
    SemidirectAlgebra p = alpha_product(c.a, c.a, c.alpha);
    Matrix iso = alpha_iso(c.a, c.a, c.alpha);
    Algebra direct = direct_product(c.a, c.a).total;
    o.require(inverse(iso).has_value(), std::string(c.name) + ": iso not invertible");
    o.require(transports(iso, direct, p.total), std::string(c.name) + ": structure constants differ");
    o.require(!transport_violation(iso, direct, p.total), std::string(c.name) + ": library transport check");
    TheoremReport r = verify_special_case("5.4", p);
    tally(r);
    o.require(r.verdict == Verdict::Verified, std::string(c.name) + ": 5.4 report");
  }
  o.detail << " (alpha = 0 on Q, id on Q, id on M2)";
}

void criterion_7(Outcome& o) {
  DerivationFixture f = fixture_example_3_3(standard::scalars());
  bool der = is_derivation(f.derivation, f.algebra.total, regular_action(f.algebra.total));
  BlockDecomposition b = split_blocks(f.derivation, f.algebra);
  bool tau1 = !is_zero(flatten(b.tau1));
  bool inner = inner_characterization(f.derivation, f.algebra).has_value();
  o.detail << " (derivation " << der << ", tau1 nonzero " << tau1 << ", inner witness " << inner << ")";
  o.require(der, "not a derivation");
  o.require(tau1, "tau1 vanishes");
  o.require(!inner, "inner witness found");
}

std::vector<SelftestSummary> battery_runs;

void criterion_8(Outcome& o) {
  auto t0 = Clock::now();
  std::size_t checks = 0, failed = 0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    SelftestOptions opt;
    opt.seed = seed;
    opt.cases = 200;
    opt.max_dim = 3;
    opt.fixture_dir = SEMIDIRECT_FIXTURE_DIR;
    battery_runs.push_back(selftest(opt));
    const SelftestSummary& s = battery_runs.back();
    checks += s.total_checks();
    failed += s.failed_checks();
    o.require(s.failed_checks() == 0, "seed " + std::to_string(seed) + "\n" + s.render());
  }
  o.detail << " (" << checks << " checks, " << failed << " failed, " << seconds_since(t0) << " s)";
}

void criterion_9(Outcome& o) {
  std::size_t battery_verdicts = 0, battery_mismatches = 0;
  for (const SelftestSummary& s : battery_runs) {
    battery_mismatches += s.mismatches();
    for (const auto& [id, c] : s.verdicts) battery_verdicts += c.verified + c.not_met + c.mismatch;
  }
  o.require(battery_runs.size() == 3, "battery did not run");
  o.detail << " (" << battery_verdicts + verdicts_seen << " verdicts, " << battery_mismatches + mismatches_seen
           << " MISMATCH)";
  o.require(battery_mismatches == 0 && mismatches_seen == 0, "MISMATCH reported");
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  report(1, "block criterion equals the Leibniz kernel on >= 200 seeded instances", criterion_1);
  report(2, "H1 oracles for M2, dual numbers, Q, T2", criterion_2);
  report(3, "verify 4.1 and additive H1 on direct products", criterion_3);
  report(4, "verify 4.4 on theta-Lau(Q, null, 1)", criterion_4);
  report(5, "cte on T(Q, Q)", criterion_5);
  report(6, "alpha-product isomorphism for alpha in {0, id_Q, id_M2}", criterion_6);
  report(7, "example-3.3 derivation over Q", criterion_7);
  report(8, "invariant battery, seeds 1-3 x 200", criterion_8);
  report(9, "no MISMATCH verdict anywhere", criterion_9);
  std::printf("%d of 9 criteria failed, %.1f s\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
