#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jordan/algebra.hpp"
#include "jordan/report.hpp"

namespace jordan {

// Sampled checks of the structural hypotheses. Trial t draws its inputs from
// Rng(derive_seed(seed, t)), so any trial can be replayed on its own. A pass
// means no counterexample among `trials` samples; trials == 0 is inconclusive.

/// Random elements decompose into certified atoms that sum to the unit and
/// reconstruct the element within 1e-8 of its order norm.
CheckReport check_spectrality(const Algebra& algebra, int trials, std::uint64_t seed,
                              const Tolerances& tol = default_tolerances());

/// For random p not below q, finds an atom state mu with mu(p) = 1 and
/// mu(q) < 1 - 1e-8. Pairs with p <= q are redrawn (up to 32 times) from
/// the trial's own stream, then skipped.
CheckReport check_strong_state_space(const Algebra& algebra, int trials, std::uint64_t seed,
                                     const Tolerances& tol = default_tolerances());

/// The face of the join of two distinct atoms has capacity 2, and the
/// projections below it are atoms or the join itself.
CheckReport check_gbit(const Algebra& algebra, int trials, std::uint64_t seed,
                       const Tolerances& tol = default_tolerances());

/// dim(p v e) - dim(p) is 0 or 1, and every q = p v e'' with e'' an atom
/// below p v e equals p or p v e.
CheckReport check_covering(const Algebra& algebra, int trials, std::uint64_t seed,
                           const Tolerances& tol = default_tolerances());

/// Passes when check_gbit and check_covering reach the same verdict.
CheckReport check_gbit_covering_equivalence(const Algebra& algebra, int trials, std::uint64_t seed,
                                            const Tolerances& tol = default_tolerances());

/// The center has the unit as its only minimal projection.
CheckReport check_irreducible(const Algebra& algebra, int sample_budget, std::uint64_t seed = 0,
                              const Tolerances& tol = default_tolerances());

/// For random atom pairs, an automorphism with T(e1) = e2 (within 1e-8) is
/// constructed and certified. Blocks of equal shape are exchanged by a block
/// swap; blocks of different shape admit no such map.
CheckReport check_weak_symmetry(const Algebra& algebra, int trials, std::uint64_t seed,
                                const Tolerances& tol = default_tolerances());

/// Names accepted by run_suite, in suite order ("all" excluded).
const std::vector<std::string>& suite_names();

/// Runs one named check or, for "all", every check in suite order. Throws
/// PreconditionError for an unknown name.
std::vector<CheckReport> run_suite(const Algebra& algebra, const std::string& name, int trials, std::uint64_t seed,
                                   const Tolerances& tol = default_tolerances());

/// Re-runs the single trial recorded in a failure witness.
CheckReport replay_witness(const nlohmann::json& witness, const Tolerances& tol = default_tolerances());

/// Fail beats inconclusive beats pass.
Verdict combine(const std::vector<CheckReport>& reports);

}  // namespace jordan
