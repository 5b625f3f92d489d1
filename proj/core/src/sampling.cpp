#include "jordan/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "jordan/errors.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

namespace {

Element leaf_projection(const Algebra& alg, int rank, Rng& rng) {
  if (alg.kind() == AlgebraKind::Spin) {
    if (rank == 0) return Element::zero(alg);
    if (rank == 2) return unit(alg);
    Vector v(static_cast<std::size_t>(alg.size()));
    for (auto& x : v) x = rng.gaussian();
    const double n = norm(v);
    for (auto& x : v) x *= 0.5 / n;
    return spin_element(alg, 0.5, v);
  }
  const auto m = static_cast<std::size_t>(alg.size());
  const RingMatrix u = haar_unitary(m, alg.ring(), rng);
  RingMatrix p(m, m);
  for (int k = 0; k < rank; ++k) p += RingMatrix::outer(u.column(static_cast<std::size_t>(k)));
  return from_ring_matrix(alg, p);
}

}  // namespace

Element random_element(const Algebra& algebra, Rng& rng) {
  Vector c(algebra.real_dim());
  for (auto& x : c) x = rng.gaussian();
  return Element(algebra, std::move(c));
}

Element random_cone_element(const Algebra& algebra, Rng& rng) {
  const Element b = random_element(algebra, rng);
  return jordan_product(b, b);
}

Element random_projection(const Algebra& algebra, Rng& rng, std::optional<int> rank) {
  const int capacity = algebra.capacity();
  const int total = rank.value_or(rng.uniform_int(0, capacity));
  if (total < 0 || total > capacity) throw PreconditionError("random_projection: rank out of range");
  const auto blocks = algebra.blocks();
  std::vector<int> block_rank(blocks.size(), 0);
  // Hand out rank units one at a time to blocks with spare capacity.
  for (int k = 0; k < total; ++k) {
    std::vector<std::size_t> open;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (block_rank[b] < blocks[b].algebra.capacity()) open.push_back(b);
    const std::size_t pick = open[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(open.size()) - 1))];
    ++block_rank[pick];
  }
  if (algebra.kind() != AlgebraKind::Sum) return leaf_projection(algebra, block_rank[0], rng);
  Element p = Element::zero(algebra);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    p += embed_block(algebra, b, leaf_projection(blocks[b].algebra, block_rank[b], rng));
  return p;
}

Element random_atom(const Algebra& algebra, Rng& rng) {
  const auto blocks = algebra.blocks();
  const auto b = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(blocks.size()) - 1));
  const Element atom = leaf_projection(blocks[b].algebra, 1, rng);
  if (algebra.kind() != AlgebraKind::Sum) return atom;
  return embed_block(algebra, b, atom);
}

Element random_projection_below(const Element& p, Rng& rng, std::optional<int> rank) {
  if (max_abs(p.coords()) <= default_tolerances().compare) return Element::zero(p.algebra());
  const Face face = restrict_to(p);
  return face.embed(random_projection(face.algebra, rng, rank));
}

DenseMatrix random_positive_definite(std::size_t n, Rng& rng) {
  DenseMatrix a(n, n);
  for (auto& x : a.data()) x = rng.gaussian();
  DenseMatrix g = a.transpose() * a;
  g *= 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) += 1.0;
  return g;
}

}  // namespace jordan
