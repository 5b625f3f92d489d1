#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

namespace jordan {

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view verdict_name(Verdict v);

/// Outcome of a sampled check. "pass" means no counterexample in `trials`
/// trials; a failing report always carries a re-runnable witness (algebra,
/// seed, trial index and the offending inputs).
struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::Inconclusive;
  int trials = 0;
  int evaluated = 0;
  double worst_residual = 0.0;
  std::string message;
  nlohmann::json witness;  // null unless the verdict is Fail

  bool passed() const { return verdict == Verdict::Pass; }
};

}  // namespace jordan
