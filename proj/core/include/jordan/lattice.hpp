#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/errors.hpp"

namespace jordan {

/// An element of the logic L_A = ext[0, 1]: spectrum contained in {0, 1}.
/// Only constructible through certification (or the lattice operations, which
/// certify their results), so the cached rank is always consistent.
class Projection {
 public:
  const Element& element() const { return element_; }
  const Algebra& algebra() const { return element_.algebra(); }
  /// Number of atoms in a peeling of this projection.
  int rank() const { return rank_; }

 private:
  Projection(Element e, int rank) : element_(std::move(e)), rank_(rank) {}
  friend Projection certify_projection(const Element&, const Tolerances&);
  friend Projection zero_projection(const Algebra&);
  friend Projection unit_projection(const Algebra&);
  friend Projection complement(const Projection&);
  friend Projection meet(const Projection&, const Projection&, const Tolerances&);

  Element element_;
  int rank_;
};

/// Accepts iff every spectral value lies within tol.projection of 0 or 1.
/// Throws NotAProjectionError carrying the offending eigenvalue otherwise.
Projection certify_projection(const Element& a, const Tolerances& tol = default_tolerances());
std::optional<Projection> try_certify_projection(const Element& a, const Tolerances& tol = default_tolerances());

Projection zero_projection(const Algebra& algebra);
Projection unit_projection(const Algebra& algebra);

/// p <= q, i.e. q - p in the cone (tolerance tol.projection).
bool leq(const Projection& p, const Projection& q, const Tolerances& tol = default_tolerances());
/// p' = 1 - p
Projection complement(const Projection& p);
/// p + q <= 1
bool orthogonal(const Projection& p, const Projection& q, const Tolerances& tol = default_tolerances());
bool approx_equal(const Projection& p, const Projection& q, double tol);

/// Greatest lower bound. Spectrally decomposes p + q and sums the atoms whose
/// eigenvalue lies within tol.meet_eigenvalue of 2. An eigenspace that is not
/// below both arguments is a near miss and is left out.
Projection meet(const Projection& p, const Projection& q, const Tolerances& tol = default_tolerances());
/// (p' ^ q')'
Projection join(const Projection& p, const Projection& q, const Tolerances& tol = default_tolerances());

/// q = e_1 + ... + e_r with pairwise orthogonal atoms; r = rank(q).
std::vector<Projection> peel_atoms(const Projection& q, const Tolerances& tol = default_tolerances());
/// Dimension function: number of atoms in a peeling.
int dim(const Projection& p, const Tolerances& tol = default_tolerances());

/// p and q decompose as p = q1 + q2, q = q2 + q3 with q1, q2, q3 pairwise
/// orthogonal projections (q2 = p ^ q).
bool compatible(const Projection& p, const Projection& q, const Tolerances& tol = default_tolerances());

/// Face algebra of a projection.
Face restrict_to(const Projection& p, const Tolerances& tol = default_tolerances());

/// Minimal central projections with their block algebras.
struct CenterDecomposition {
  std::vector<Projection> central;
  std::vector<Face> blocks;

  bool irreducible() const { return central.size() == 1; }
};

/// Thrown when a candidate central projection is incompatible with some
/// sampled projection; carries both.
class CenterVerificationError : public Error {
 public:
  CenterVerificationError(const std::string& what, Element candidate, Element witness)
      : Error(what), candidate_(std::move(candidate)), witness_(std::move(witness)) {}
  const Element& candidate() const { return candidate_; }
  const Element& witness() const { return witness_; }

 private:
  Element candidate_;
  Element witness_;
};

/// Candidates come from the direct-sum structure of the descriptor (a single
/// block yields {1}); each is verified compatible with `sample_budget` random
/// projections.
CenterDecomposition center(const Algebra& algebra, int sample_budget, std::uint64_t seed,
                           const Tolerances& tol = default_tolerances());

/// Maximum number of pairwise orthogonal nonzero projections, computed by
/// peeling the unit.
int info_capacity(const Algebra& algebra, const Tolerances& tol = default_tolerances());

}  // namespace jordan
