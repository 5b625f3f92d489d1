#pragma once

namespace jordan {

/// Numerical tolerances shared by every module. Relative tolerances are
/// scaled by max(1, ||.||) of the quantity they guard.
struct Tolerances {
  double symmetry = 1e-10;         // eigensolver input asymmetry
  double eigen_cluster = 1e-8;     // eigenvalues this close share an eigenspace
  double projection = 1e-8;        // spectrum must lie this close to {0, 1}
  double meet_eigenvalue = 1e-7;   // |s_k - 2| threshold in the meet
  double compare = 1e-9;           // element equality
  double cone = 1e-9;              // min eigenvalue >= -cone for cone membership
  double rank_drop = 1e-9;         // Gram-Schmidt rank detection

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace jordan
