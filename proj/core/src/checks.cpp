#include "jordan/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "jordan/errors.hpp"
#include "jordan/lattice.hpp"
#include "jordan/random.hpp"
#include "jordan/sampling.hpp"
#include "jordan/serialize.hpp"
#include "jordan/symmetry.hpp"

namespace jordan {

using nlohmann::json;

namespace {

constexpr double kReconstructionTol = 1e-8;
constexpr int kPairDraws = 32;
constexpr double kStateGap = 1e-8;
constexpr double kLatticeCompare = 1e-8;
constexpr double kTransportTol = 1e-8;
constexpr int kAutomorphismTrials = 4;

enum class Outcome { Ok, Skipped, Failed, Undecided };

struct TrialResult {
  Outcome outcome = Outcome::Ok;
  double residual = 0.0;
  std::string message;
  json detail = nullptr;
};

TrialResult ok(double residual = 0.0) { return {Outcome::Ok, residual, "", nullptr}; }
TrialResult skipped() { return {Outcome::Skipped, 0.0, "", nullptr}; }
TrialResult failed(std::string message, json detail, double residual = 0.0) {
  return {Outcome::Failed, residual, std::move(message), std::move(detail)};
}

using TrialFn = std::function<TrialResult(const Algebra&, Rng&, const Tolerances&)>;

CheckReport run_trials(const std::string& property, const Algebra& algebra, int trials, std::uint64_t seed,
                       const Tolerances& tol, const TrialFn& trial) {
  CheckReport report{property, Verdict::Pass, trials, 0, 0.0, "", nullptr};
  if (trials <= 0) {
    report.verdict = Verdict::Inconclusive;
    report.message = "no trials requested";
    return report;
  }
  int undecided = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    TrialResult r;
    try {
      r = trial(algebra, rng, tol);
    } catch (const Error& e) {
      r = failed(e.what(), json::object());
    }
    if (r.outcome == Outcome::Skipped) continue;
    ++report.evaluated;
    report.worst_residual = std::max(report.worst_residual, r.residual);
    if (r.outcome == Outcome::Undecided) {
      ++undecided;
      continue;
    }
    if (r.outcome == Outcome::Failed) {
      report.verdict = Verdict::Fail;
      report.message = "trial " + std::to_string(t) + ": " + r.message;
      json w = r.detail.is_object() ? r.detail : json::object();
      w["property"] = property;
      w["algebra"] = algebra_to_json(algebra);
      w["seed"] = seed;
      w["trial"] = t;
      report.witness = std::move(w);
      return report;
    }
  }
  if (undecided > 0) {
    report.verdict = Verdict::Inconclusive;
    report.message = std::to_string(undecided) + " trial(s) found no witness";
  } else if (report.evaluated == 0) {
    report.verdict = Verdict::Inconclusive;
    report.message = "every sampled trial was vacuous";
  } else {
    report.message = "no counterexample in " + std::to_string(report.evaluated) + " evaluated trial(s)";
  }
  return report;
}

// Block index on which an atom is supported.
std::size_t home_block(const Element& atom, const Tolerances& tol) {
  const auto blocks = atom.algebra().blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (max_abs(atom.block(i).coords()) > tol.compare) return i;
  throw PreconditionError("zero element has no home block");
}

double order_scale(const Element& a) { return std::max(1.0, order_norm(a)); }

// ---------------------------------------------------------------- trials

TrialResult spectrality_trial(const Algebra& alg, Rng& rng, const Tolerances& tol) {
  const Element a = random_element(alg, rng);
  const SpectralDecomposition sd = spectral_decompose(a, tol);
  const double scale = order_scale(a);
  const double rec = max_abs_diff(sd.reconstruct(), a) / scale;
  const double sum = max_abs_diff(sd.atom_sum(), unit(alg));
  const json detail{{"element", a.coords()}};
  if (rec > kReconstructionTol) return failed("reconstruction residual too large", detail, rec);
  if (sum > kReconstructionTol) return failed("atoms do not sum to the unit", detail, sum);
  if (static_cast<int>(sd.atom_count()) > alg.capacity()) return failed("more atoms than the capacity", detail);
  for (const auto& space : sd.spaces)
    for (const auto& e : space.atoms) {
      const auto p = try_certify_projection(e, tol);
      if (!p || p->rank() != 1) return failed("spectral atom is not a rank-one projection", detail);
    }
  return ok(std::max(rec, sum));
}

TrialResult strong_state_trial(const Algebra& alg, Rng& rng, const Tolerances& tol) {
  // Pairs with p <= q say nothing; redraw a bounded number of times.
  std::optional<Projection> pp, qq;
  for (int attempt = 0; attempt < kPairDraws; ++attempt) {
    pp = certify_projection(random_projection(alg, rng), tol);
    qq = certify_projection(random_projection(alg, rng), tol);
    if (!leq(*pp, *qq, tol)) break;
  }
  if (leq(*pp, *qq, tol)) return skipped();
  const Projection& p = *pp;
  const Projection& q = *qq;

  auto witness = [&](const Element& atom) -> std::optional<double> {
    const State mu = atom_state(atom, tol);
    if (std::abs(mu(p.element()) - 1.0) > kStateGap) return std::nullopt;
    const double mq = mu(q.element());
    if (mq < 1.0 - kStateGap) return mq;
    return std::nullopt;
  };
  for (const auto& e : peel_atoms(p, tol))
    if (witness(e.element())) return ok();

  const Face face = restrict_to(p, tol);
  const SpectralDecomposition sd = spectral_decompose(face.compress(q.element()), tol);
  for (const auto& space : sd.spaces) {
    if (space.value >= 1.0 - kStateGap) break;
    for (const auto& f : space.atoms)
      if (witness(face.embed(f))) return ok();
  }
  TrialResult r;
  r.outcome = Outcome::Undecided;
  r.message = "no separating state found";
  return r;
}

TrialResult gbit_trial(const Algebra& alg, Rng& rng, const Tolerances& tol) {
  const Projection e1 = certify_projection(random_atom(alg, rng), tol);
  const Projection e2 = certify_projection(random_atom(alg, rng), tol);
  if (approx_equal(e1, e2, kLatticeCompare)) return skipped();
  const Projection f = join(e1, e2, tol);
  const json detail{{"e1", e1.element().coords()}, {"e2", e2.element().coords()}};
  const Face face = restrict_to(f, tol);
  const int cap = info_capacity(face.algebra, tol);
  if (cap != 2) {
    json d = detail;
    d["face"] = face.algebra.name();
    d["face_capacity"] = cap;
    return failed("face of e1 v e2 has capacity " + std::to_string(cap), d);
  }
  const int rank = rng.uniform_int(1, cap);
  const Projection q = certify_projection(random_projection_below(f.element(), rng, rank), tol);
  if (!leq(q, f, tol)) return failed("sampled projection is not below e1 v e2", detail);
  const int d = dim(q, tol);
  if (d == 1) return ok();
  if (approx_equal(q, f, kLatticeCompare)) return ok(max_abs_diff(q.element(), f.element()));
  json dq = detail;
  dq["q"] = q.element().coords();
  return failed("projection below e1 v e2 is neither an atom nor the join", dq);
}

TrialResult covering_trial(const Algebra& alg, Rng& rng, const Tolerances& tol) {
  const Projection p = certify_projection(random_projection(alg, rng), tol);
  const Projection e = certify_projection(random_atom(alg, rng), tol);
  const Projection j = join(p, e, tol);
  json detail{{"p", p.element().coords()}, {"e", e.element().coords()}};
  const int step = dim(j, tol) - dim(p, tol);
  if (step != 0 && step != 1) {
    detail["rank_step"] = step;
    return failed("dim(p v e) - dim(p) = " + std::to_string(step), detail);
  }
  const Projection e2 = certify_projection(random_projection_below(j.element(), rng, 1), tol);
  const Projection q = join(p, e2, tol);
  if (!leq(p, q, tol) || !leq(q, j, tol)) return failed("sandwich element is not between p and p v e", detail);
  const double to_p = max_abs_diff(q.element(), p.element());
  const double to_j = max_abs_diff(q.element(), j.element());
  const double residual = std::min(to_p, to_j);
  if (approx_equal(q, p, kLatticeCompare) || approx_equal(q, j, kLatticeCompare)) return ok(residual);
  detail["q"] = q.element().coords();
  return failed("p <= q <= p v e with q distinct from both endpoints", detail, residual);
}

// Coordinate permutation exchanging two blocks of identical shape.
Automorphism block_swap(const Algebra& alg, std::size_t b1, std::size_t b2) {
  const auto blocks = alg.blocks();
  const std::size_t n = alg.real_dim();
  DenseMatrix m(n, n);
  std::vector<std::size_t> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = i;
  const std::size_t len = blocks[b1].algebra.real_dim();
  for (std::size_t k = 0; k < len; ++k) {
    target[blocks[b1].offset + k] = blocks[b2].offset + k;
    target[blocks[b2].offset + k] = blocks[b1].offset + k;
  }
  for (std::size_t i = 0; i < n; ++i) m(target[i], i) = 1.0;
  return Automorphism{alg, std::move(m)};
}

TrialResult weak_symmetry_trial(const Algebra& alg, Rng& rng, const Tolerances& tol) {
  const Element e1 = random_atom(alg, rng);
  const Element e2 = random_atom(alg, rng);
  const std::uint64_t verify_seed = rng.next();
  json detail{{"e1", e1.coords()}, {"e2", e2.coords()}};
  const std::size_t b1 = home_block(e1, tol);
  const std::size_t b2 = home_block(e2, tol);
  Automorphism t = identity_automorphism(alg);
  if (b1 != b2) {
    const auto blocks = alg.blocks();
    if (!(blocks[b1].algebra == blocks[b2].algebra)) {
      detail["obstruction"] = {
          {"block1", {{"index", b1}, {"algebra", blocks[b1].algebra.name()},
                      {"real_dim", blocks[b1].algebra.real_dim()}, {"capacity", blocks[b1].algebra.capacity()}}},
          {"block2", {{"index", b2}, {"algebra", blocks[b2].algebra.name()},
                      {"real_dim", blocks[b2].algebra.real_dim()}, {"capacity", blocks[b2].algebra.capacity()}}}};
      return failed("atoms lie in non-isomorphic blocks " + blocks[b1].algebra.name() + " and " +
                        blocks[b2].algebra.name() + "; no automorphism maps one to the other",
                    detail);
    }
    t = block_swap(alg, b1, b2);
  }
  t = transport_automorphism(t.apply(e1), e2, tol).after(t);
  const double residual = max_abs_diff(t.apply(e1), e2);
  if (residual > kTransportTol) return failed("T(e1) differs from e2", detail, residual);
  const CheckReport cert = verify_automorphism(t, kAutomorphismTrials, verify_seed);
  if (!cert.passed()) {
    detail["automorphism"] = report_to_json(cert);
    return failed("constructed map is not an automorphism: " + cert.message, detail, residual);
  }
  return ok(residual);
}

const TrialFn* trial_for(const std::string& property) {
  static const TrialFn spectrality = spectrality_trial;
  static const TrialFn strong = strong_state_trial;
  static const TrialFn gbit = gbit_trial;
  static const TrialFn covering = covering_trial;
  static const TrialFn weak = weak_symmetry_trial;
  if (property == "spectrality") return &spectrality;
  if (property == "strong-states") return &strong;
  if (property == "gbit") return &gbit;
  if (property == "covering") return &covering;
  if (property == "weak-symmetry") return &weak;
  return nullptr;
}

}  // namespace

CheckReport check_spectrality(const Algebra& algebra, int trials, std::uint64_t seed, const Tolerances& tol) {
  return run_trials("spectrality", algebra, trials, seed, tol, spectrality_trial);
}

CheckReport check_strong_state_space(const Algebra& algebra, int trials, std::uint64_t seed, const Tolerances& tol) {
  return run_trials("strong-states", algebra, trials, seed, tol, strong_state_trial);
}

CheckReport check_gbit(const Algebra& algebra, int trials, std::uint64_t seed, const Tolerances& tol) {
  return run_trials("gbit", algebra, trials, seed, tol, gbit_trial);
}

CheckReport check_covering(const Algebra& algebra, int trials, std::uint64_t seed, const Tolerances& tol) {
  return run_trials("covering", algebra, trials, seed, tol, covering_trial);
}

CheckReport check_gbit_covering_equivalence(const Algebra& algebra, int trials, std::uint64_t seed,
                                            const Tolerances& tol) {
  const CheckReport g = check_gbit(algebra, trials, seed, tol);
  const CheckReport c = check_covering(algebra, trials, seed, tol);
  CheckReport report{"equivalence", Verdict::Pass, trials, g.evaluated + c.evaluated,
                     std::max(g.worst_residual, c.worst_residual), "", nullptr};
  const std::string summary =
      "gbit: " + std::string(verdict_name(g.verdict)) + ", covering: " + std::string(verdict_name(c.verdict));
  if (g.verdict == Verdict::Inconclusive || c.verdict == Verdict::Inconclusive) {
    report.verdict = Verdict::Inconclusive;
    report.message = summary;
  } else if (g.verdict != c.verdict) {
    report.verdict = Verdict::Fail;
    report.message = "verdicts disagree (" + summary + ")";
    report.witness = {{"property", "equivalence"},
                      {"algebra", algebra_to_json(algebra)},
                      {"seed", seed},
                      {"trials", trials},
                      {"gbit", report_to_json(g)},
                      {"covering", report_to_json(c)}};
  } else {
    report.message = "verdicts agree (" + summary + ")";
  }
  return report;
}

CheckReport check_irreducible(const Algebra& algebra, int sample_budget, std::uint64_t seed, const Tolerances& tol) {
  CheckReport report{"irreducible", Verdict::Pass, sample_budget, 0, 0.0, "", nullptr};
  if (sample_budget <= 0) {
    report.verdict = Verdict::Inconclusive;
    report.message = "no samples to verify central candidates";
    return report;
  }
  json base{{"property", "irreducible"}, {"algebra", algebra_to_json(algebra)},
            {"seed", seed}, {"sample_budget", sample_budget}};
  try {
    const CenterDecomposition c = center(algebra, sample_budget, seed, tol);
    report.evaluated = sample_budget * static_cast<int>(c.central.size());
    if (c.irreducible()) {
      report.message = "center is trivial";
      return report;
    }
    report.verdict = Verdict::Fail;
    report.message = "center has " + std::to_string(c.central.size()) + " minimal projections";
    base["central"] = element_to_json(c.central.front().element());
    base["central_count"] = c.central.size();
    report.witness = std::move(base);
  } catch (const CenterVerificationError& e) {
    report.verdict = Verdict::Fail;
    report.message = e.what();
    base["candidate"] = element_to_json(e.candidate());
    base["incompatible"] = element_to_json(e.witness());
    report.witness = std::move(base);
  }
  return report;
}

CheckReport check_weak_symmetry(const Algebra& algebra, int trials, std::uint64_t seed, const Tolerances& tol) {
  return run_trials("weak-symmetry", algebra, trials, seed, tol, weak_symmetry_trial);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"spectrality", "strong-states", "gbit",         "covering",
                                              "equivalence", "irreducible",   "weak-symmetry"};
  return names;
}

std::vector<CheckReport> run_suite(const Algebra& algebra, const std::string& name, int trials, std::uint64_t seed,
                                   const Tolerances& tol) {
  auto one = [&](const std::string& n) -> CheckReport {
    if (n == "spectrality") return check_spectrality(algebra, trials, seed, tol);
    if (n == "strong-states") return check_strong_state_space(algebra, trials, seed, tol);
    if (n == "gbit") return check_gbit(algebra, trials, seed, tol);
    if (n == "covering") return check_covering(algebra, trials, seed, tol);
    if (n == "equivalence") return check_gbit_covering_equivalence(algebra, trials, seed, tol);
    if (n == "irreducible") return check_irreducible(algebra, trials, seed, tol);
    if (n == "weak-symmetry") return check_weak_symmetry(algebra, trials, seed, tol);
    throw PreconditionError("unknown check '" + n + "'");
  };
  std::vector<CheckReport> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(one(n));
  } else {
    out.push_back(one(name));
  }
  return out;
}

CheckReport replay_witness(const json& witness, const Tolerances& tol) {
  try {
    const std::string property = witness.at("property").get<std::string>();
    const Algebra alg = algebra_from_json(witness.at("algebra"));
    const auto seed = witness.at("seed").get<std::uint64_t>();
    if (property == "irreducible") return check_irreducible(alg, witness.at("sample_budget").get<int>(), seed, tol);
    if (property == "equivalence") return check_gbit_covering_equivalence(alg, witness.at("trials").get<int>(), seed, tol);
    const TrialFn* fn = trial_for(property);
    if (!fn) throw ParseError("witness names unknown property '" + property + "'");
    const int trial = witness.at("trial").get<int>();
    CheckReport report = run_trials(property, alg, 1, seed, tol,
                                    [&](const Algebra& a, Rng&, const Tolerances& t) {
                                      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
                                      return (*fn)(a, rng, t);
                                    });
    if (report.witness.is_object()) report.witness["trial"] = trial;
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed witness: ") + e.what());
  }
}

Verdict combine(const std::vector<CheckReport>& reports) {
  Verdict v = Verdict::Pass;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return Verdict::Fail;
    if (r.verdict == Verdict::Inconclusive) v = Verdict::Inconclusive;
  }
  return v;
}

}  // namespace jordan
