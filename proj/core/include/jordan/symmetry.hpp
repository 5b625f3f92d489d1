#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/report.hpp"

namespace jordan {

/// Unit-preserving order automorphism, stored as its matrix on coordinates.
struct Automorphism {
  Algebra algebra;
  DenseMatrix matrix;

  Element apply(const Element& a) const;
  /// (this o first)(a) = this(first(a))
  Automorphism after(const Automorphism& first) const;
};

Automorphism identity_automorphism(const Algebra& algebra);
/// a -> U a U^* on a matrix algebra.
Automorphism conjugation(const Algebra& algebra, const RingMatrix& u);
/// (s, v) -> (s, R v) on a spin factor, R orthogonal.
Automorphism spin_rotation(const Algebra& algebra, const DenseMatrix& r);

/// Haar sample from the conjugation subgroup: U from haar_unitary over the
/// algebra's ring for matrix blocks, a Haar orthogonal map of V for spin
/// blocks; blockwise on direct sums (blocks are never permuted).
Automorphism sample_automorphism(const Algebra& algebra, std::uint64_t seed);

/// Rotation by `angle` in the plane spanned by the orthonormal ring vectors
/// u, w: R = 1 + (cos t - 1)(uu^* + ww^*) + sin t (wu^* - uw^*), so R u =
/// cos t u + sin t w. R(t) = exp(t K) with K = wu^* - uw^*.
struct PlaneRotation {
  Ring ring = Ring::Real;
  RingVector u;
  RingVector w;
  double angle = 0.0;

  RingMatrix at(double t) const;
};

/// One-parameter family T_t built from a fixed generator. T_0 = id and
/// T_1 transports e1 to e2.
struct AutomorphismPath {
  Algebra algebra;
  std::optional<std::size_t> block;  // empty when e1 = e2 (constant path)
  PlaneRotation rotation;
  /// Bound L with ||T_t - T_s||_max <= L |t - s|: Frobenius norm of the
  /// generator on coordinates.
  double lipschitz = 0.0;

  Automorphism at(double t) const;
};

/// Path for transporting atom e1 to atom e2 (minimal rotation angle; at angle
/// pi the lexicographically first plane is used). Throws NoAutomorphismError
/// when the atoms live in different direct-sum blocks.
AutomorphismPath transport_path(const Element& e1, const Element& e2, const Tolerances& tol = default_tolerances());

/// T with T(e1) = e2.
Automorphism transport_automorphism(const Element& e1, const Element& e2,
                                    const Tolerances& tol = default_tolerances());

/// T_t from transport_path.
Automorphism continuous_path(const Element& e1, const Element& e2, double t,
                             const Tolerances& tol = default_tolerances());

/// Checks unit fixing, cone preservation of T and T^{-1} on random cone
/// elements, and the invertibility residual.
CheckReport verify_automorphism(const Automorphism& t, int trials, std::uint64_t seed);

/// Symmetric positive definite Gram matrix on coordinates.
struct InnerProductForm {
  Algebra algebra;
  DenseMatrix gram;
  /// max over test automorphisms of ||G - T^T G T||_max; 0 when exact.
  double invariance_residual = 0.0;

  double operator()(const Element& a, const Element& b) const;
};

/// Throws PreconditionError unless gram is symmetric (1e-10) and positive definite.
void validate_form(const InnerProductForm& form);

/// Trace form Re tr(ab) on matrix blocks (identity Gram in these coordinates)
/// and 2 (st + v.w) on spin blocks; makes every atom a unit vector with
/// <e|e'> = 0.
InnerProductForm trace_form(const Algebra& algebra);

struct InvariantProductResult {
  InnerProductForm form;
  Element reference_atom;   // atom used for normalization, <e|e>_o = 1
  bool converged = true;    // invariance residual within threshold
  std::string message;
};

/// Monte-Carlo Haar average <a|b>_o = mean_i <T_i a | T_i b> over n_samples
/// sampled automorphisms (pairwise summation in index order, per-index
/// derived seeds), scaled so the reference atom has norm 1. The residual is
/// measured on `test_automorphisms` fresh samples.
InvariantProductResult invariant_inner_product(const InnerProductForm& base, int n_samples, std::uint64_t seed,
                                               double residual_threshold = 1e-2, int test_automorphisms = 16);

/// Rescale a form so that <atom|atom> = 1.
InnerProductForm normalize_on_atom(const InnerProductForm& form, const Element& atom);

}  // namespace jordan
