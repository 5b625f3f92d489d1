#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jordan/dense_matrix.hpp"
#include "jordan/ring_matrix.hpp"
#include "jordan/tolerance.hpp"

namespace jordan {

enum class AlgebraKind { Matrix, Spin, Sum };

/// Descriptor of a concrete finite-dimensional order unit space:
///   matrix(ring, m)  Hermitian m x m matrices over R, C or H with the
///                    symmetrized product;
///   spin(n)          R 1 (+) R^n with (s, v)(t, w) = (st + v.w, sw + tv);
///   sum(parts)       direct sum, always stored flattened.
///
/// Immutable and cheap to copy (shared node).
///
/// Coordinates: matrix algebras use the basis that is orthonormal for the
/// trace form <a|b> = Re tr(ab): diagonal entries first, then for each i < j
/// (row-major) the d real components of a_ij scaled by sqrt(2). Spin factors
/// use (s, v_1, ..., v_n). Sums concatenate their blocks.
class Algebra {
 public:
  struct Block;

  static Algebra matrix(Ring ring, int m);
  static Algebra spin(int n);
  static Algebra sum(const std::vector<Algebra>& parts);

  AlgebraKind kind() const;
  /// Matrix algebras only.
  Ring ring() const;
  /// Matrix size m (matrix) or vector dimension n (spin).
  int size() const;
  /// Flattened summands (sum only; empty otherwise).
  const std::vector<Algebra>& parts() const;

  std::size_t real_dim() const;
  /// Declared information capacity: m, 2, or the sum over parts.
  int capacity() const;
  std::vector<std::string> basis_labels() const;
  /// Short human-readable name such as "H_3(C)" or "spin(4) + H_2(R)".
  std::string name() const;

  /// Simple summands with their coordinate offsets. A non-sum algebra is its
  /// own single block.
  std::vector<Block> blocks() const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Node;
  explicit Algebra(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Algebra::Block {
  Algebra algebra;
  std::size_t offset;
};

/// The direct sum A_1 (+) ... (+) A_n.
Algebra direct_sum(const std::vector<Algebra>& parts);

/// A vector of real coordinates in the algebra's basis.
class Element {
 public:
  Element(Algebra algebra, Vector coords);
  static Element zero(const Algebra& algebra);

  const Algebra& algebra() const { return algebra_; }
  const Vector& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  /// Coordinates of block `index` as an element of that block's algebra.
  Element block(std::size_t index) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(double s);

 private:
  Algebra algebra_;
  Vector coords_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(const Element& a);
Element operator*(Element a, double s);
Element operator*(double s, Element a);

/// max |a_i - b_i|
double max_abs_diff(const Element& a, const Element& b);
/// max|a - b| <= tol * max(1, ||a||_max, ||b||_max)
bool approx_equal(const Element& a, const Element& b, double tol);

/// Places a block element into the full algebra (zeros elsewhere).
Element embed_block(const Algebra& algebra, std::size_t index, const Element& part);

/// Matrix-algebra conversions. `from_ring_matrix` keeps the Hermitian part.
RingMatrix to_ring_matrix(const Element& a);
Element from_ring_matrix(const Algebra& algebra, const RingMatrix& h);

/// Spin-factor element s 1 + v.
Element spin_element(const Algebra& algebra, double s, std::span<const double> v);

Element unit(const Algebra& algebra);
Element jordan_product(const Element& a, const Element& b);

struct Eigenspace {
  double value;
  std::vector<Element> atoms;
};

/// a = sum_k s_k e_k with pairwise orthogonal atoms e_k summing to the unit.
/// Distinct eigenvalues appear once (ascending) with all their atoms; the
/// atoms inside a degenerate eigenspace are not canonical.
struct SpectralDecomposition {
  Algebra algebra;
  std::vector<Eigenspace> spaces;

  std::size_t atom_count() const;
  Element reconstruct() const;
  Element atom_sum() const;
  double min_value() const;
  double max_value() const;
};

SpectralDecomposition spectral_decompose(const Element& a,
                                         const Tolerances& tol = default_tolerances());

/// Eigenvalues with multiplicity, ascending; length equals the capacity.
Vector spectral_values(const Element& a, const Tolerances& tol = default_tolerances());

/// Ring eigenvectors per distinct eigenvalue of a matrix-algebra element.
struct RingEigenspace {
  double value;
  std::vector<RingVector> vectors;
};
std::vector<RingEigenspace> matrix_eigenspaces(const Element& a,
                                               const Tolerances& tol = default_tolerances());

/// inf{s : -s 1 <= a <= s 1} = max_k |s_k|.
double order_norm(const Element& a);

/// 0 <= a, i.e. min eigenvalue >= -tol. Default tol is
/// tolerances.cone * max(1, ||a||).
bool in_cone(const Element& a, std::optional<double> tol = std::nullopt);

/// A non-negative normalized linear functional, acting by dot product on
/// coordinates.
struct State {
  Algebra algebra;
  Vector functional;

  double operator()(const Element& a) const;
};

/// The state concentrated on an atom: mu(e) = 1, mu(e') = 0. Vector state of
/// the range for matrix algebras; a -> <e|a>_1 = 2 e.a for spin factors.
State atom_state(const Element& atom, const Tolerances& tol = default_tolerances());

/// The face algebra A_p of a projection p together with the embedding back
/// into A and a compression A -> A_p (compress(embed(b)) = b). For matrix
/// algebras the compression is b -> W^* b W on the range W of p.
struct Face {
  Algebra algebra;
  Algebra ambient;
  DenseMatrix embedding;    // real_dim(A) x real_dim(A_p)
  DenseMatrix compression;  // real_dim(A_p) x real_dim(A)

  Element embed(const Element& b) const;
  Element compress(const Element& a) const;
};

/// Face restriction to a nonzero projection p. Throws PreconditionError for
/// p = 0 and NotAProjectionError if p is not a projection.
Face restrict_to(const Element& p, const Tolerances& tol = default_tolerances());

}  // namespace jordan
