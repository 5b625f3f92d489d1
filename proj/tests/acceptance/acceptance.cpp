// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Usage: acceptance [criterion...]   (default: all)

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "jordan/checks.hpp"
#include "jordan/lattice.hpp"
#include "jordan/reconstruct.hpp"
#include "jordan/sampling.hpp"
#include "jordan/serialize.hpp"
#include "jordan/symmetry.hpp"
#include "oracles.hpp"

#ifdef JORDAN_HAVE_CLI
#include "cli.hpp"
#endif

using namespace jordan;
using nlohmann::json;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Algebra> oracle_algebras() {
  std::vector<Algebra> out;
  for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion})
    for (int m = 2; m <= 5; ++m) out.push_back(Algebra::matrix(r, m));
  for (int n : {2, 3, 7}) out.push_back(Algebra::spin(n));
  return out;
}

Algebra sum_same() { return direct_sum({Algebra::matrix(Ring::Real, 2), Algebra::matrix(Ring::Real, 2)}); }
Algebra sum_mixed() { return direct_sum({Algebra::matrix(Ring::Complex, 2), Algebra::matrix(Ring::Real, 3)}); }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Reused by criteria 1 and 4.
std::vector<std::pair<Algebra, std::vector<CheckReport>>>& suite_results() {
  static std::vector<std::pair<Algebra, std::vector<CheckReport>>> results;
  if (results.empty())
    for (const auto& alg : oracle_algebras()) results.emplace_back(alg, run_suite(alg, "all", 500, kSeed));
  return results;
}

Outcome criterion_1() {
  Outcome o;
  int checks = 0;
  for (const auto& [alg, reports] : suite_results()) {
    for (const auto& r : reports) {
      ++checks;
      if (r.verdict != Verdict::Pass || r.evaluated < 500) {
        o.pass = false;
        o.detail += alg.name() + "/" + r.property + "=" + std::string(verdict_name(r.verdict)) + " ";
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " checks over " + std::to_string(suite_results().size()) + " algebras";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  double worst = 0.0;
  int failures = 0;
  const auto algebras = oracle_algebras();
  for (std::size_t k = 0; k < algebras.size(); ++k) {
    const Algebra& alg = algebras[k];
    Rng rng(derive_seed(kSeed, 200 + k));
    for (int t = 0; t < 1000; ++t) {
      const Projection p = certify_projection(random_projection(alg, rng));
      const Projection q = certify_projection(random_projection(alg, rng));
      const double dm1 = max_abs_diff(complement(meet(p, q)).element(), join(complement(p), complement(q)).element());
      const double dm2 = max_abs_diff(complement(join(p, q)).element(), meet(complement(p), complement(q)).element());
      const Projection below = certify_projection(random_projection_below(p.element(), rng));
      const double om = max_abs_diff(join(below, meet(p, complement(below))).element(), p.element());
      const bool diff_ok = try_certify_projection(p.element() - below.element()).has_value() && leq(below, p);
      const double w = std::max({dm1, dm2, om});
      worst = std::max(worst, w);
      if (w > 1e-8 || !diff_ok) {
        if (failures++ == 0) o.detail = alg.name() + " trial " + std::to_string(t) + " ";
        o.pass = false;
      }
    }
  }
  o.detail += "worst residual " + fmt(worst) + ", " + std::to_string(failures) + " failing pairs";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  int agree = 0, total = 0;
  double worst = 0.0;
  for (int m = 2; m <= 5; ++m) {
    const Algebra alg = Algebra::matrix(Ring::Complex, m);
    Rng rng(derive_seed(kSeed, 100 + m));
    for (int t = 0; t < 500; ++t) {
      oracle::MatrixXcd hp, hq;
      if (t % 2 == 0) {
        std::tie(hp, hq) = oracle::structured_pair(m, rng);
      } else {
        hp = oracle::to_complex(random_projection(alg, rng));
        hq = oracle::to_complex(random_projection(alg, rng));
      }
      const Projection p = certify_projection(oracle::from_complex(alg, hp));
      const Projection q = certify_projection(oracle::from_complex(alg, hq));
      const oracle::MatrixXcd expect = oracle::intersection_projection(oracle::to_complex(p.element()),
                                                                        oracle::to_complex(q.element()));
      const Projection got = meet(p, q);
      const double err = (oracle::to_complex(got.element()) - expect).cwiseAbs().maxCoeff();
      worst = std::max(worst, err);
      ++total;
      if (got.rank() == oracle::rank_of(expect) && err <= 1e-8) ++agree;
    }
  }
  o.pass = agree == total;
  o.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree, worst " + fmt(worst);
  return o;
}

Outcome criterion_4() {
  Outcome o;
  int algebras = 0;
  auto record = [&](const Algebra& alg, const CheckReport& g, const CheckReport& c, bool must_pass) {
    ++algebras;
    if (g.verdict != c.verdict || (must_pass && g.verdict != Verdict::Pass)) {
      o.pass = false;
      o.detail += alg.name() + " gbit=" + std::string(verdict_name(g.verdict)) +
                  " covering=" + std::string(verdict_name(c.verdict)) + " ";
    }
  };
  for (const auto& [alg, reports] : suite_results()) {
    const auto find = [&](const std::string& name) {
      return *std::find_if(reports.begin(), reports.end(), [&](const CheckReport& r) { return r.property == name; });
    };
    record(alg, find("gbit"), find("covering"), false);
  }
  for (const auto& alg : {sum_same(), sum_mixed(), direct_sum({Algebra::spin(3), Algebra::matrix(Ring::Quaternion, 2)})})
    record(alg, check_gbit(alg, 500, kSeed), check_covering(alg, 500, kSeed), true);
  if (o.pass) o.detail = "verdicts agree on " + std::to_string(algebras) + " algebras, sums pass both";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const Algebra alg = sum_mixed();
  const CenterDecomposition c = center(alg, 500, kSeed);
  const int capacity = info_capacity(alg);
  Rng rng(derive_seed(kSeed, 5));
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Element x = random_element(alg, rng);
    Element blockwise = Element::zero(alg);
    for (std::size_t i = 0; i < alg.parts().size(); ++i) blockwise += embed_block(alg, i, x.block(i));
    Element via_center = Element::zero(alg);
    for (const Face& f : c.blocks) via_center += f.embed(f.compress(x));
    worst = std::max({worst, max_abs_diff(blockwise, x), max_abs_diff(via_center, x)});
  }
  o.pass = c.central.size() == 2 && capacity == 5 && worst <= 1e-10;
  o.detail = "central projections " + std::to_string(c.central.size()) + ", capacity " + std::to_string(capacity) +
             ", round-trip worst " + fmt(worst);
  return o;
}

InvariantProductResult mc_product(std::uint64_t seed) {
  const Algebra alg = Algebra::matrix(Ring::Complex, 2);
  Rng rng(derive_seed(seed, 0));
  const InnerProductForm base{alg, random_positive_definite(alg.real_dim(), rng), 0.0};
  return invariant_inner_product(base, 10000, seed);
}

Outcome criterion_6() {
  Outcome o;
  const InvariantProductResult a = mc_product(kSeed);
  const InvariantProductResult b = mc_product(kSeed);
  Rng rng(derive_seed(kSeed, 6));
  double worst_norm = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Element e = random_atom(a.form.algebra, rng);
    worst_norm = std::max(worst_norm, std::abs(a.form(e, e) - 1.0));
  }
  const double residual = a.form.invariance_residual;
  const bool repeat = a.form.gram == b.form.gram && residual == b.form.invariance_residual;
  o.pass = residual <= 5e-3 && worst_norm <= 5e-3 && repeat;
  o.detail = "residual " + fmt(residual) + ", worst |<e|e>-1| " + fmt(worst_norm) +
             (repeat ? ", bit-exact repeat" : ", repeat differs");
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const InvariantProductResult inv = mc_product(kSeed);
  const SpinConstruction c = reconstruct_spin_factor(inv.form, 64, derive_seed(kSeed, 2));
  const CheckReport j = verify_jordan(c.table, 500, derive_seed(kSeed, 3), 1e-7);
  const NativeMatch m = match_native(c, 500, derive_seed(kSeed, 4));
  Rng rng(derive_seed(kSeed, 7));
  double worst_idem = 0.0;
  for (int t = 0; t < 200; ++t) {
    Vector dir(c.v_basis.cols());
    for (auto& x : dir) x = rng.gaussian();
    const Element e = c.atom(dir);
    worst_idem = std::max(worst_idem, max_abs_diff(c.product(e, e), e));
  }
  const double bound = 10.0 * inv.form.invariance_residual;
  o.pass = j.verdict == Verdict::Pass && m.product_residual <= bound && worst_idem <= 1e-7;
  o.detail = "verify_jordan " + std::string(verdict_name(j.verdict)) + ", product residual " +
             fmt(m.product_residual) + " (bound " + fmt(bound) + "), idempotence " + fmt(worst_idem);
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const CheckReport irr = check_irreducible(sum_same(), 500, kSeed);
  const json serialized = json::parse(report_to_json(irr).dump());
  const bool irr_ok = irr.verdict == Verdict::Fail && serialized.at("witness").is_object() &&
                      replay_witness(serialized.at("witness")).verdict == Verdict::Fail;

  ProductTable table = ProductTable::from_algebra(Algebra::matrix(Ring::Complex, 2));
  table.at(0, 2, 3) += 0.1;
  table.at(0, 3, 2) += 0.1;
  const CheckReport vj = verify_jordan(table, 500, kSeed);
  const bool table_ok = vj.verdict == Verdict::Fail && vj.witness.is_object();

  const CheckReport ws = check_weak_symmetry(sum_mixed(), 500, kSeed);
  const bool ws_ok = ws.verdict == Verdict::Fail && ws.witness.contains("obstruction");

  o.pass = irr_ok && table_ok && ws_ok;
  o.detail = std::string("irreducibility ") + (irr_ok ? "fails with witness" : "NOT rejected") + ", perturbed table " +
             (table_ok ? "fails" : "NOT rejected") + ", cross-block weak symmetry " +
             (ws_ok ? "fails with obstruction" : "NOT rejected");
  return o;
}

Outcome criterion_9() {
  Outcome o;
#ifdef JORDAN_HAVE_CLI
  const std::string qubit = R"({"kind":"matrix","ring":"C","m":2})";
  const std::string p = R"({"algebra":{"kind":"matrix","ring":"R","m":3},"coords":[1,1,0,0,0,0]})";
  const std::string q = R"({"algebra":{"kind":"matrix","ring":"R","m":3},"coords":[0.5,1,0.5,0,0.7071067811865476,0]})";
  const std::vector<std::vector<std::string>> commands{
      {"check", "--algebra", algebra_to_json(sum_mixed()).dump(), "--trials", "100"},
      {"check", "--algebra", algebra_to_json(sum_same()).dump(), "--suite", "irreducible"},
      {"spectral", "--element", p},
      {"lattice", "--op", "meet", "--p", p, "--q", q},
      {"reconstruct", "--algebra", qubit, "--samples", "5000", "--trials", "100"},
  };
  int identical = 0;
  for (auto args : commands) {
    args.insert(args.begin(), "jordanlogic");
    args.insert(args.end(), {"--seed", "3", "--no-timestamp"});
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::string outputs[2];
    int codes[2];
    for (int k = 0; k < 2; ++k) {
      std::ostringstream out, err;
      codes[k] = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
      outputs[k] = out.str();
    }
    if (outputs[0] == outputs[1] && codes[0] == codes[1] && !outputs[0].empty())
      ++identical;
    else
      o.detail += args[1] + " differs; ";
  }
  o.pass = identical == static_cast<int>(commands.size());
  o.detail += std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical";
#else
  o.pass = false;
  o.detail = "command-line tool not built";
#endif
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {"oracle algebras pass the full hypothesis suite", criterion_1},
    {"lattice laws on 1000 pairs per algebra", criterion_2},
    {"meet agrees with subspace-intersection oracle", criterion_3},
    {"gbit and covering verdicts agree", criterion_4},
    {"H_2(C) + H_3(R) decomposition", criterion_5},
    {"Monte-Carlo invariant product on H_2(C)", criterion_6},
    {"end-to-end spin-factor reconstruction", criterion_7},
    {"negative controls", criterion_8},
    {"CLI determinism", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(n)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = kCriteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s -- %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", n, kCriteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
