#pragma once

#include <cstdint>
#include <vector>

#include "jordan/dense_matrix.hpp"
#include "jordan/random.hpp"
#include "jordan/ring_matrix.hpp"

namespace jordan {

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// stored as columns.
struct EigenSystem {
  Vector values;
  DenseMatrix vectors;
};

/// Cyclic Jacobi eigensolver for real symmetric matrices.
///
/// Sweeps until the off-diagonal Frobenius norm falls below 1e-12 * ||M||_F
/// (at most 100 sweeps). Throws AsymmetricMatrixError carrying the measured
/// asymmetry when M is not square or max|M - M^T| > symmetry_tol * max(1, ||M||_max).
EigenSystem sym_eigen(const DenseMatrix& m, double symmetry_tol = 1e-10);

/// Modified Gram-Schmidt in the standard inner product. Vectors whose
/// residual norm falls below `drop_tol` are dropped, so the result size is
/// the numerical rank of the input.
std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors, double drop_tol = 1e-9);

/// Same, orthonormal with respect to <x, y> = x^T G y for positive definite G.
std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors, const DenseMatrix& metric,
                                 double drop_tol = 1e-9);

/// LU with partial pivoting. Throws Error when a pivot is below 1e-14 * ||A||_max.
DenseMatrix inverse(const DenseMatrix& a);
Vector solve(const DenseMatrix& a, std::span<const double> b);

/// Orthogonal polar factor of a square matrix: the orthogonal Q closest to
/// `m` in Frobenius norm. Solves orthogonal Procrustes when m = A^T B.
DenseMatrix polar_orthogonal(const DenseMatrix& m);

/// Haar-distributed n x n orthogonal / unitary / symplectic matrix over the
/// ring: Gaussian entries, orthonormalized column by column (which fixes the
/// triangular factor's diagonal to be positive).
RingMatrix haar_unitary(std::size_t n, Ring ring, Rng& rng);

/// Real embedding (n*d x n*d) of haar_unitary with a fresh generator.
DenseMatrix haar_structured(std::size_t n, Ring ring, std::uint64_t seed);

}  // namespace jordan
