#pragma once

#include <optional>

#include "jordan/algebra.hpp"
#include "jordan/random.hpp"

namespace jordan {

/// Standard Gaussian coordinates.
Element random_element(const Algebra& algebra, Rng& rng);

/// b o b for a random b.
Element random_cone_element(const Algebra& algebra, Rng& rng);

/// Projection of the given total rank (uniform in [0, capacity] when omitted),
/// with ranks spread randomly across direct-sum blocks. Within a block the
/// range is Haar-distributed.
Element random_projection(const Algebra& algebra, Rng& rng, std::optional<int> rank = std::nullopt);

/// Rank-one projection in a uniformly chosen block.
Element random_atom(const Algebra& algebra, Rng& rng);

/// Random projection q <= p, drawn in the face algebra of p and embedded.
/// Returns 0 for p = 0.
Element random_projection_below(const Element& p, Rng& rng, std::optional<int> rank = std::nullopt);

/// Random symmetric positive definite n x n matrix (Wishart-like plus identity).
DenseMatrix random_positive_definite(std::size_t n, Rng& rng);

}  // namespace jordan
