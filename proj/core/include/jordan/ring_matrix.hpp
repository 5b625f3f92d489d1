#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "jordan/dense_matrix.hpp"
#include "jordan/quaternion.hpp"

namespace jordan {

/// Associative division ring over which matrix algebras are built.
enum class Ring { Real, Complex, Quaternion };

/// Real dimension of the ring: 1, 2 or 4.
constexpr int ring_dim(Ring r) { return r == Ring::Real ? 1 : r == Ring::Complex ? 2 : 4; }
std::string_view ring_symbol(Ring r);
Ring parse_ring(std::string_view symbol);

using RingVector = std::vector<Quaternion>;

/// Matrix with quaternion entries; real and complex matrices use the
/// corresponding subring (unused components stay zero).
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RingMatrix identity(std::size_t n);
  /// v v^*
  static RingMatrix outer(const RingVector& v);
  static RingMatrix from_columns(const std::vector<RingVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RingVector column(std::size_t c) const;
  RingMatrix adjoint() const;

  RingMatrix& operator+=(const RingMatrix& o);
  RingMatrix& operator*=(double s);

  /// Real representation: each entry q becomes the upper-left d x d block of
  /// its left-multiplication matrix, d = ring_dim(ring). Hermitian matrices map
  /// to symmetric matrices and products are preserved.
  DenseMatrix to_real(Ring ring) const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
RingMatrix operator+(RingMatrix a, const RingMatrix& b);
RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
RingVector operator*(const RingMatrix& a, const RingVector& v);

/// sum_i conj(u_i) v_i
Quaternion ring_inner(const RingVector& u, const RingVector& v);
double ring_norm(const RingVector& v);
/// v q (right scalar multiplication)
RingVector right_scale(const RingVector& v, const Quaternion& q);

/// Ring vector from the real layout used by RingMatrix::to_real (d consecutive
/// components per entry).
RingVector ring_vector_from_real(std::span<const double> x, Ring ring);
Vector ring_vector_to_real(const RingVector& v, Ring ring);

/// Pivoted Gram-Schmidt over the ring (right-module inner product). At each
/// step the candidate with the largest residual is taken; stops when the
/// largest residual drops below `min_residual`. Returns ring-orthonormal vectors.
std::vector<RingVector> ring_gram_schmidt(std::vector<RingVector> candidates, double min_residual);

}  // namespace jordan
