#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "jordan/algebra.hpp"
#include "jordan/report.hpp"
#include "jordan/symmetry.hpp"

namespace jordan {

/// Coefficient of <v|w>_1 in the reconstructed spin product
/// (v + s1)(w + t1) = tv + sw + (c <v|w>_1 + st) 1. With <e|e>_1 = 1 and
/// <e|e'>_1 = 0 this is the value that makes every atom idempotent.
inline constexpr double kSpinProductCoefficient = 0.5;

/// Bilinear product given by structure constants: (a b)_k = sum c_kij a_i b_j.
class ProductTable {
 public:
  ProductTable(std::size_t dim, Vector unit);

  /// Structure constants of the native Jordan product of an algebra.
  static ProductTable from_algebra(const Algebra& algebra);

  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  double& at(std::size_t k, std::size_t i, std::size_t j) { return constants_[(k * dim_ + i) * dim_ + j]; }
  double at(std::size_t k, std::size_t i, std::size_t j) const { return constants_[(k * dim_ + i) * dim_ + j]; }
  const std::vector<double>& constants() const { return constants_; }

  Vector multiply(std::span<const double> a, std::span<const double> b) const;
  /// Left multiplication matrix L_a.
  DenseMatrix left_multiplication(std::span<const double> a) const;

 private:
  std::size_t dim_;
  Vector unit_;
  std::vector<double> constants_;
};

/// Commutativity, unit law, the Jordan identity (a^2 b) a = a^2 (b a) and
/// positivity of squares, on random elements. Positivity uses the table's
/// own trace form tau(x, y) = tr L_{xy}: it must be positive definite, and
/// L_{a^2} (self-adjoint for tau) must have non-negative spectrum.
CheckReport verify_jordan(const ProductTable& table, int trials, std::uint64_t seed, double tol = 1e-7);

struct SoEstimate {
  double value = 0.0;   // mean of <e|e'>_o over sampled atoms
  double spread = 0.0;  // max - min over the sample
  int atoms = 0;
};

/// Atom used for normalization and the first s_o sample.
Element reference_atom(const Algebra& algebra, std::uint64_t seed);

/// s_o = <e|e'>_o for atoms e of a capacity-2 algebra, estimated over
/// `atom_samples` atoms of random elements. Throws PreconditionError when
/// the capacity is not 2 or |s_o| >= 1 - 1e-6, and InconclusiveError when the
/// spread exceeds max(10 * invariance residual, 1e-9).
SoEstimate compute_s_o(const InnerProductForm& product_o, int atom_samples, std::uint64_t seed);

/// <a|b>_1 = [<a|b>_o - s_o/(1+s_o)^2 <1|a>_o <1|b>_o] / (1 - s_o)
InnerProductForm build_product_1(const InnerProductForm& product_o, double s_o);

/// Columns: a <.|.>_1-orthonormal basis of V = {v : <1|v>_1 = 0}.
DenseMatrix split_unit_complement(const InnerProductForm& product_1);

struct SpinConstruction {
  Algebra source;
  InnerProductForm product_o;
  InnerProductForm product_1;
  double s_o = 0.0;
  DenseMatrix v_basis;  // real_dim x (real_dim - 1)
  ProductTable table;

  /// Element ((1 + u) / 2 with u in V, <u|u>_1 = 2) along a direction given
  /// in V-basis coordinates.
  Element atom(std::span<const double> direction) const;
  Element product(const Element& a, const Element& b) const;
  /// Spectrum s +- sqrt(c <v|v>_1) of a = s 1 + v in the constructed algebra.
  std::pair<double, double> spectral_values(const Element& a) const;
};

SpinConstruction build_spin_product(const InnerProductForm& product_o, const InnerProductForm& product_1, double s_o,
                                    const DenseMatrix& v_basis);

/// Full pipeline from an invariant product: normalize on the reference atom,
/// estimate s_o, build <.|.>_1, split off V, build the spin product.
SpinConstruction reconstruct_spin_factor(const InnerProductForm& product_o, int atom_samples, std::uint64_t seed);

/// Comparison with the source algebra's native product after aligning the
/// constructed V basis to the native one by orthogonal Procrustes.
struct NativeMatch {
  double table_residual = 0.0;    // structure constants in the aligned basis
  double product_residual = 0.0;  // max |a o_c b - a o b| on random elements
  DenseMatrix rotation;           // Procrustes rotation of V
};
NativeMatch match_native(const SpinConstruction& construction, int trials, std::uint64_t seed);

}  // namespace jordan
