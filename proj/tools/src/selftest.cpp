#include "semidirect/cli/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "semidirect/cli/runner.hpp"

namespace semidirect::cli {

namespace {

// Streams for the shrinking retries never collide with case streams.
constexpr std::uint64_t shrink_stream = std::uint64_t{1} << 40;
constexpr std::size_t shrink_budget = 48;

CaseResult evaluate(const GeneratedInstance& inst, Generator& g, std::size_t index) {
  CaseResult r;
  r.index = index;
  r.family = inst.family;
  r.recipe = inst.recipe;
  r.dim_a = inst.product.n();
  r.dim_u = inst.product.m();
  BatteryResult b = run_battery(inst, g);
  r.checks = b.checks.size();
  for (const Check& c : b.checks)
    if (!c.holds) r.failures.push_back(c);
  r.reports = std::move(b.reports);
  return r;
}

CaseResult evaluate_guarded(std::uint64_t seed, std::uint64_t stream, ProductFamily family, std::size_t max_dim,
                            std::size_t index) {
  Generator g(seed, stream);
  try {
    return evaluate(g.instance(family, max_dim), g, index);
  } catch (const std::exception& e) {
    CaseResult r;
    r.index = index;
    r.family = family;
    r.recipe = "(generation failed)";
    r.checks = 1;
    r.failures.push_back({"instance generation", false, e.what()});
    return r;
  }
}

std::optional<std::string> shrink(std::uint64_t seed, const CaseResult& failed, std::size_t max_dim) {
  const std::size_t per_dim = std::max<std::size_t>(1, shrink_budget / max_dim);
  for (std::size_t d = 1; d <= max_dim; ++d)
    for (std::size_t t = 0; t < per_dim; ++t) {
      std::uint64_t stream = shrink_stream + failed.index * shrink_budget * 8 + d * shrink_budget + t;
      CaseResult r = evaluate_guarded(seed, stream, failed.family, d, failed.index);
      if (!r.failures.empty())
        return r.recipe + " (dim A " + std::to_string(r.dim_a) + ", dim U " + std::to_string(r.dim_u) +
               "): " + r.failures.front().name;
    }
  return std::nullopt;
}

Check expect_verdict(const std::string& name, const TheoremReport& r, Verdict v, std::size_t lhs, std::size_t rhs) {
  bool ok = r.verdict == v && (v != Verdict::Verified || (r.lhs_dim == lhs && r.rhs_dim == rhs));
  return {name, ok,
          std::string(to_string(r.verdict)) + " lhs " + std::to_string(r.lhs_dim) + " rhs " + std::to_string(r.rhs_dim)};
}

Check expect_dim(const std::string& name, std::size_t got, std::size_t want) {
  return {name, got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want)};
}

}  // namespace

std::size_t SelftestSummary::total_checks() const {
  std::size_t n = fixture_checks.size();
  for (const CaseResult& c : cases) n += c.checks;
  return n;
}

std::size_t SelftestSummary::failed_checks() const {
  std::size_t n = 0;
  for (const Check& c : fixture_checks) n += !c.holds;
  for (const CaseResult& c : cases) n += c.failures.size();
  return n;
}

std::size_t SelftestSummary::mismatches() const {
  std::size_t n = 0;
  for (const auto& [_, v] : verdicts) n += v.mismatch;
  return n;
}

std::string SelftestSummary::render() const {
  std::ostringstream out;
  out << "selftest seed=" << options.seed << " max_dim=" << options.max_dim << " cases=" << options.cases << "\n";
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_family;
  for (const CaseResult& c : cases) {
    auto& [n, bad] = by_family[std::string(to_string(c.family))];
    ++n;
    bad += !c.failures.empty();
  }
  for (const auto& [family, counts] : by_family)
    out << "  family " << family << ": " << counts.first << " cases, " << counts.second << " failing\n";
  for (const auto& [id, v] : verdicts)
    out << "  verify " << id << ": verified " << v.verified << ", hypotheses-not-met " << v.not_met << ", MISMATCH "
        << v.mismatch << "\n";
  std::size_t fixture_failures = 0;
  for (const Check& c : fixture_checks)
    if (!c.holds) {
      ++fixture_failures;
      out << "  FAIL fixture " << c.name << ": " << c.witness << "\n";
    }
  out << "  fixtures: " << fixture_checks.size() - fixture_failures << "/" << fixture_checks.size() << " pass\n";
  for (const CaseResult& c : cases) {
    if (c.failures.empty()) continue;
    out << "  FAIL case " << c.index << " [" << to_string(c.family) << "] " << c.recipe << "\n";
    for (const Check& f : c.failures) out << "    " << f.name << (f.witness.empty() ? "" : ": " + f.witness) << "\n";
    if (c.shrunk) out << "    smallest failing instance: " << *c.shrunk << "\n";
  }
  out << "checks: " << total_checks() - failed_checks() << " passed, " << failed_checks() << " failed; mismatches: "
      << mismatches() << "\n";
  out << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

CaseResult run_case(std::uint64_t seed, std::size_t max_dim, std::size_t index) {
  auto family = static_cast<ProductFamily>(index % product_family_count);
  return evaluate_guarded(seed, index, family, max_dim, index);
}

std::vector<Check> builtin_fixture_checks() {
  using namespace standard;
  std::vector<Check> out;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  };
  const Algebra q = scalars(), m2 = matrix_algebra(2), dual = dual_numbers(), null1 = null_algebra(1);
  const Character one{"theta", {Rational(1)}};

  guarded("h1 oracles", [&] {
    out.push_back(expect_dim("h1(M2) = 0", h1_dim(m2), 0));
    out.push_back(expect_dim("h1(dual numbers) = 1", h1_dim(dual), 1));
    out.push_back(expect_dim("h1(Q) = 0", h1_dim(q), 0));
    out.push_back(expect_dim("h1(T2) = 0", h1_dim(upper_triangular(2)), 0));
  });
  guarded("theta-Lau(Q, null1)", [&] {
    SemidirectAlgebra p = theta_lau(q, null1, one);
    out.push_back(expect_verdict("theta-Lau(Q, null1): 4.4", verify("4.4", p), Verdict::Verified, 1, 1));
    out.push_back(expect_verdict("theta-Lau(Q, null1): prop10", verify("prop10", p), Verdict::Verified, 1, 1));
  });
  guarded("T(Q,Q)", [&] {
    SemidirectAlgebra t = module_extension(q, regular_action(q));
    out.push_back(expect_verdict("T(Q,Q): cte", verify("cte", t), Verdict::Verified, 1, 1));
    out.push_back(expect_dim("h1(T(Q,Q)) = 1", h1_dim(t.total), 1));
  });
  guarded("example 3.3", [&] {
    DerivationFixture fx = fixture_example_3_3(q);
    const SemidirectAlgebra& p = fx.algebra;
    out.push_back({"example 3.3: derivation", is_derivation(fx.derivation, p.total, regular_action(p.total)), ""});
    out.push_back({"example 3.3: tau1 nonzero", !split_blocks(fx.derivation, p).tau1.is_zero(), ""});
    out.push_back({"example 3.3: not inner", !inner_characterization(fx.derivation, p).has_value(), ""});
  });
  guarded("example 3.4", [&] {
    Character aug{"aug", {Rational(1), Rational(0)}};
    Matrix gamma(1, 2);
    gamma(0, 1) = Rational(1);
    DerivationFixture fx = fixture_example_3_4(dual, character_action(aug, 1), gamma);
    const SemidirectAlgebra& p = fx.algebra;
    out.push_back({"example 3.4: derivation", is_derivation_via_3_1(fx.derivation, p), ""});
    out.push_back({"example 3.4: tau1 nonzero", !split_blocks(fx.derivation, p).tau1.is_zero(), ""});
  });
  guarded("direct products", [&] {
    out.push_back(expect_verdict("M2 x Q: 3.1", verify("3.1", direct_product(m2, q)), Verdict::Verified, 3, 3));
    SemidirectAlgebra qq = direct_product(direct_sum(q, q), m2);
    out.push_back(expect_verdict("(Q x Q) x M2: 4.1", verify("4.1", qq), Verdict::Verified, 0, 0));
    out.push_back(expect_verdict("M2 x M2: 5.1", verify("5.1", direct_product(m2, m2)), Verdict::Verified, 6, 6));
    out.push_back(expect_verdict("M2 x dual: 5.3", verify("5.3", direct_product(m2, dual)), Verdict::Verified, 1, 1));
  });
  guarded("M2 regular", [&] {
    TheoremReport r = verify("4.1", module_extension(m2, regular_action(m2)));
    const Check* gate = r.first_failed_hypothesis();
    out.push_back({"M2 regular: 4.1 gated on derA-in-annAU",
                   r.verdict == Verdict::HypothesesNotMet && gate && gate->name == "derA-in-annAU",
                   std::string(to_string(r.verdict))});
  });
  guarded("alpha products", [&] {
    out.push_back(expect_verdict("alpha = 0 on Q: 5.4", verify("5.4", alpha_product(q, q, Matrix(1, 1))),
                                 Verdict::Verified, 0, 0));
    out.push_back(expect_verdict("alpha = id on Q: 5.4", verify("5.4", alpha_product(q, q, Matrix::identity(1))),
                                 Verdict::Verified, 0, 0));
    out.push_back(expect_verdict("alpha = id on M2: 5.4", verify("5.4", alpha_product(m2, m2, Matrix::identity(4))),
                                 Verdict::Verified, 0, 0));
  });
  guarded("dual numbers as unitization", [&] {
    SemidirectAlgebra p = unitization(null1);
    Matrix d(2, 2);
    d(1, 1) = Rational(1);
    out.push_back({"unitization(null1): t -> t is a derivation", is_derivation_via_3_1(d, p), ""});
    out.push_back({"unitization(null1): t -> t is not inner", !inner_characterization(d, p).has_value(), ""});
    out.push_back(expect_verdict("unitization(null1): 4.4", verify("4.4", p), Verdict::Verified, 1, 1));
  });
  return out;
}

std::vector<Check> fixture_file_checks(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Check> out;
  for (const auto& path : files) {
    RunResult r = run_file(path);
    std::string witness;
    if (r.report.contains("error")) witness = r.report["error"]["message"].get<std::string>();
    for (const Json& job : r.report["jobs"])
      if (job["status"] != "ok") {
        witness = "job " + std::to_string(job["index"].get<std::size_t>()) + " " + job["status"].get<std::string>();
        break;
      }
    out.push_back({"fixture file " + path.filename().string(), r.exit_code == exit_ok, witness});
  }
  if (files.empty()) out.push_back({"fixture directory " + dir.string(), false, "no *.json files"});
  return out;
}

SelftestSummary selftest(const SelftestOptions& options) {
  if (options.cases == 0) fail(ErrorKind::ShapeMismatch, "selftest needs cases >= 1");
  if (options.max_dim == 0) fail(ErrorKind::ShapeMismatch, "selftest needs max_dim >= 1");
  SelftestSummary s;
  s.options = options;
  s.cases.resize(options.cases);

  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, options.cases);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < options.cases; i = next++) {
      CaseResult r = run_case(options.seed, options.max_dim, i);
      if (!r.failures.empty() && options.shrink) r.shrunk = shrink(options.seed, r, options.max_dim);
      s.cases[i] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const CaseResult& c : s.cases)
    for (const TheoremReport& r : c.reports) {
      VerdictCounts& v = s.verdicts[r.theorem_id];
      switch (r.verdict) {
        case Verdict::Verified: ++v.verified; break;
        case Verdict::HypothesesNotMet: ++v.not_met; break;
        case Verdict::Mismatch: ++v.mismatch; break;
      }
    }
  s.fixture_checks = builtin_fixture_checks();
  if (options.fixture_dir) {
    std::vector<Check> files = fixture_file_checks(*options.fixture_dir);
    s.fixture_checks.insert(s.fixture_checks.end(), files.begin(), files.end());
  }
  return s;
}

}  // namespace semidirect::cli
