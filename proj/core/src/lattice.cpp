#include "jordan/lattice.hpp"

#include <cmath>
#include <sstream>

#include "jordan/random.hpp"
#include "jordan/sampling.hpp"

namespace jordan {

Projection certify_projection(const Element& a, const Tolerances& tol) {
  const Vector values = spectral_values(a, tol);
  int rank = 0;
  for (double v : values) {
    if (std::abs(v - 1.0) <= tol.projection) {
      ++rank;
    } else if (std::abs(v) > tol.projection) {
      std::ostringstream os;
      os << "not a projection: eigenvalue " << v << " is not in {0, 1}";
      throw NotAProjectionError(os.str(), v);
    }
  }
  return Projection(a, rank);
}

std::optional<Projection> try_certify_projection(const Element& a, const Tolerances& tol) {
  try {
    return certify_projection(a, tol);
  } catch (const NotAProjectionError&) {
    return std::nullopt;
  }
}

Projection zero_projection(const Algebra& algebra) { return Projection(Element::zero(algebra), 0); }

Projection unit_projection(const Algebra& algebra) { return Projection(unit(algebra), algebra.capacity()); }

bool leq(const Projection& p, const Projection& q, const Tolerances& tol) {
  return in_cone(q.element() - p.element(), tol.projection);
}

Projection complement(const Projection& p) {
  return Projection(unit(p.algebra()) - p.element(), p.algebra().capacity() - p.rank());
}

bool orthogonal(const Projection& p, const Projection& q, const Tolerances& tol) {
  return in_cone(unit(p.algebra()) - p.element() - q.element(), tol.projection);
}

bool approx_equal(const Projection& p, const Projection& q, double tol) {
  return p.rank() == q.rank() && approx_equal(p.element(), q.element(), tol);
}

Projection meet(const Projection& p, const Projection& q, const Tolerances& tol) {
  const SpectralDecomposition sd = spectral_decompose(p.element() + q.element(), tol);
  Element x = Element::zero(p.algebra());
  int rank = 0;
  for (const auto& space : sd.spaces) {
    if (std::abs(space.value - 2.0) > tol.meet_eigenvalue) continue;
    Element part = Element::zero(p.algebra());
    for (const auto& e : space.atoms) part += e;
    // Near-miss eigenvalues (p and q almost but not quite sharing a direction)
    // give spaces that are not below both arguments; those are rejected.
    const Projection candidate(part, static_cast<int>(space.atoms.size()));
    if (!leq(candidate, p, tol) || !leq(candidate, q, tol)) continue;
    x += part;
    rank += candidate.rank();
  }
  return Projection(std::move(x), rank);
}

Projection join(const Projection& p, const Projection& q, const Tolerances& tol) {
  return complement(meet(complement(p), complement(q), tol));
}

std::vector<Projection> peel_atoms(const Projection& q, const Tolerances& tol) {
  std::vector<Projection> atoms;
  for (const auto& space : spectral_decompose(q.element(), tol).spaces) {
    if (std::abs(space.value - 1.0) > tol.projection) continue;
    for (const auto& e : space.atoms) atoms.push_back(certify_projection(e, tol));
  }
  return atoms;
}

int dim(const Projection& p, const Tolerances& tol) { return static_cast<int>(peel_atoms(p, tol).size()); }

bool compatible(const Projection& p, const Projection& q, const Tolerances& tol) {
  const Projection q2 = meet(p, q, tol);
  const auto q1 = try_certify_projection(p.element() - q2.element(), tol);
  const auto q3 = try_certify_projection(q.element() - q2.element(), tol);
  if (!q1 || !q3) return false;
  return orthogonal(*q1, q2, tol) && orthogonal(q2, *q3, tol) && orthogonal(*q1, *q3, tol);
}

Face restrict_to(const Projection& p, const Tolerances& tol) { return jordan::restrict_to(p.element(), tol); }

CenterDecomposition center(const Algebra& algebra, int sample_budget, std::uint64_t seed, const Tolerances& tol) {
  std::vector<Projection> candidates;
  if (algebra.kind() != AlgebraKind::Sum) {
    candidates.push_back(unit_projection(algebra));
  } else {
    const auto blocks = algebra.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b)
      candidates.push_back(certify_projection(embed_block(algebra, b, unit(blocks[b].algebra)), tol));
  }

  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Rng rng(derive_seed(seed, c));
    for (int t = 0; t < sample_budget; ++t) {
      const Projection sample = certify_projection(random_projection(algebra, rng), tol);
      if (!compatible(candidates[c], sample, tol))
        throw CenterVerificationError("center: candidate central projection is incompatible with a sampled projection",
                                      candidates[c].element(), sample.element());
    }
  }

  CenterDecomposition out;
  for (auto& c : candidates) {
    out.blocks.push_back(restrict_to(c, tol));
    out.central.push_back(std::move(c));
  }
  return out;
}

int info_capacity(const Algebra& algebra, const Tolerances& tol) {
  return static_cast<int>(peel_atoms(unit_projection(algebra), tol).size());
}

}  // namespace jordan
