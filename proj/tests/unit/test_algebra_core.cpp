#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "jordan/algebra.hpp"
#include "jordan/errors.hpp"
#include "jordan/random.hpp"
#include "jordan/sampling.hpp"
#include "oracles.hpp"

using namespace jordan;

namespace {

std::vector<Algebra> oracle_algebras() {
  std::vector<Algebra> out;
  for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion})
    for (int m : {1, 2, 3, 4}) out.push_back(Algebra::matrix(r, m));
  for (int n : {2, 3, 7}) out.push_back(Algebra::spin(n));
  out.push_back(direct_sum({Algebra::matrix(Ring::Complex, 2), Algebra::matrix(Ring::Real, 3)}));
  out.push_back(direct_sum({Algebra::spin(3), Algebra::matrix(Ring::Quaternion, 2)}));
  return out;
}

Element h2r(double a11, double a12, double a22) {
  return Element(Algebra::matrix(Ring::Real, 2), {a11, a22, oracle::kSqrt2 * a12});
}

double norm_of(const Element& a) { return std::max(1.0, order_norm(a)); }

}  // namespace

TEST(AlgebraDescriptor, RealDimensionsAndCapacity) {
  for (int m = 1; m <= 5; ++m) {
    EXPECT_EQ(Algebra::matrix(Ring::Real, m).real_dim(), static_cast<std::size_t>(m * (m + 1) / 2));
    EXPECT_EQ(Algebra::matrix(Ring::Complex, m).real_dim(), static_cast<std::size_t>(m * m));
    EXPECT_EQ(Algebra::matrix(Ring::Quaternion, m).real_dim(), static_cast<std::size_t>(m * (2 * m - 1)));
    EXPECT_EQ(Algebra::matrix(Ring::Quaternion, m).capacity(), m);
  }
  EXPECT_EQ(Algebra::spin(4).real_dim(), 5u);
  EXPECT_EQ(Algebra::spin(4).capacity(), 2);
  const Algebra s = direct_sum({Algebra::matrix(Ring::Complex, 2), Algebra::matrix(Ring::Real, 3)});
  EXPECT_EQ(s.real_dim(), 4u + 6u);
  EXPECT_EQ(s.capacity(), 5);
  EXPECT_EQ(s.basis_labels().size(), s.real_dim());
}

TEST(AlgebraDescriptor, SumsFlattenAndCompareStructurally) {
  const Algebra a = Algebra::matrix(Ring::Real, 2);
  const Algebra nested = direct_sum({a, direct_sum({Algebra::spin(2), a})});
  EXPECT_EQ(nested.parts().size(), 3u);
  EXPECT_EQ(nested, direct_sum({a, Algebra::spin(2), a}));
  EXPECT_FALSE(Algebra::matrix(Ring::Real, 2) == Algebra::matrix(Ring::Complex, 2));
  EXPECT_EQ(nested.name(), "H_2(R) + spin(2) + H_2(R)");
}

TEST(AlgebraDescriptor, RejectsInvalidSizes) {
  EXPECT_THROW(Algebra::matrix(Ring::Real, 0), PreconditionError);
  EXPECT_THROW(Algebra::spin(1), PreconditionError);
  EXPECT_THROW(Element(Algebra::spin(2), {1.0, 2.0}), PreconditionError);
}

TEST(Unit, Examples) {
  EXPECT_EQ(unit(Algebra::matrix(Ring::Real, 2)).coords(), (Vector{1, 1, 0}));
  EXPECT_EQ(unit(Algebra::spin(3)).coords(), (Vector{1, 0, 0, 0}));
  const Algebra s = direct_sum({Algebra::matrix(Ring::Real, 2), Algebra::spin(2)});
  EXPECT_EQ(unit(s).coords(), (Vector{1, 1, 0, 1, 0, 0}));
  for (const auto& alg : oracle_algebras()) {
    const SpectralDecomposition sd = spectral_decompose(unit(alg));
    ASSERT_EQ(sd.spaces.size(), 1u);
    EXPECT_NEAR(sd.spaces[0].value, 1.0, 1e-12);
    EXPECT_EQ(sd.atom_count(), static_cast<std::size_t>(alg.capacity()));
  }
}

TEST(JordanProduct, UnitLaw) {
  Rng rng(1);
  for (const auto& alg : oracle_algebras()) {
    const Element a = random_element(alg, rng);
    EXPECT_LE(max_abs_diff(jordan_product(a, unit(alg)), a), 1e-12);
  }
}

TEST(JordanProduct, SpinAtomIsIdempotent) {
  const Algebra alg = Algebra::spin(2);
  const double half_unit[] = {0.3, 0.4};
  const Element e = spin_element(alg, 0.5, half_unit);
  EXPECT_LE(max_abs_diff(jordan_product(e, e), e), 1e-15);
}

TEST(JordanProduct, H2RealAnticommutingPair) {
  const Element a = h2r(0, 1, 0);
  const Element b = h2r(1, 0, -1);
  EXPECT_LE(max_abs(jordan_product(a, b).coords()), 1e-15);
}

TEST(JordanProduct, AgreesWithSymmetrizedMatrixProductOracle) {
  Rng rng(2);
  for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion})
    for (int m : {2, 3, 4}) {
      const Algebra alg = Algebra::matrix(r, m);
      const Element a = random_element(alg, rng), b = random_element(alg, rng);
      const auto ha = oracle::to_complex(a), hb = oracle::to_complex(b);
      const oracle::MatrixXcd expect = 0.5 * (ha * hb + hb * ha);
      EXPECT_LE((oracle::to_complex(jordan_product(a, b)) - expect).cwiseAbs().maxCoeff(), 1e-12)
          << alg.name();
    }
}

TEST(JordanProduct, SpinFormula) {
  const Algebra alg = Algebra::spin(3);
  const Element a(alg, {2, 1, 0, -1});
  const Element b(alg, {-1, 0.5, 2, 3});
  // (s, v)(t, w) = (st + v.w, sw + tv)
  const Element expect(alg, {-2 + 0.5 - 3, 2 * 0.5 - 1, 2 * 2 + 0, 2 * 3 + 1});
  EXPECT_LE(max_abs_diff(jordan_product(a, b), expect), 1e-15);
}

TEST(JordanProduct, RejectsMismatchedAlgebras) {
  EXPECT_THROW(jordan_product(unit(Algebra::spin(2)), unit(Algebra::spin(3))), AlgebraMismatchError);
}

TEST(JordanProduct, JordanIdentityInEveryAlgebra) {
  Rng rng(3);
  for (const auto& alg : oracle_algebras())
    for (int t = 0; t < 20; ++t) {
      const Element a = random_element(alg, rng), b = random_element(alg, rng);
      const Element a2 = jordan_product(a, a);
      const Element lhs = jordan_product(a2, jordan_product(b, a));
      const Element rhs = jordan_product(jordan_product(a2, b), a);
      const double scale = order_norm(a) * order_norm(a) * order_norm(b);
      EXPECT_LE(max_abs_diff(lhs, rhs), 1e-8 * std::max(1.0, scale)) << alg.name();
    }
}

TEST(JordanProduct, SpinPowerAssociativity) {
  Rng rng(4);
  const Algebra alg = Algebra::spin(4);
  for (int t = 0; t < 20; ++t) {
    const SpectralDecomposition sd = spectral_decompose(random_element(alg, rng));
    ASSERT_EQ(sd.spaces.size(), 2u);
    const Element& e = sd.spaces[1].atoms[0];
    const Element& e2 = sd.spaces[0].atoms[0];
    const double s = rng.gaussian(), u = rng.gaussian();
    const Element x = s * e + u * e2;
    Element power = x;
    for (int n = 2; n <= 4; ++n) {
      power = jordan_product(power, x);
      const Element expect = std::pow(s, n) * e + std::pow(u, n) * e2;
      EXPECT_LE(max_abs_diff(power, expect), 1e-10 * std::max(1.0, order_norm(expect)));
    }
  }
}

TEST(Spectral, UnitOfH3ComplexHasThreeAtoms) {
  const Algebra alg = Algebra::matrix(Ring::Complex, 3);
  const SpectralDecomposition sd = spectral_decompose(unit(alg));
  ASSERT_EQ(sd.spaces.size(), 1u);
  EXPECT_NEAR(sd.spaces[0].value, 1.0, 1e-12);
  ASSERT_EQ(sd.spaces[0].atoms.size(), 3u);
  EXPECT_LE(max_abs_diff(sd.atom_sum(), unit(alg)), 1e-9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      EXPECT_LE(max_abs(jordan_product(sd.spaces[0].atoms[i], sd.spaces[0].atoms[j]).coords()), 1e-9);
}

TEST(Spectral, SpinShiftedUnitVector) {
  const Algebra alg = Algebra::spin(3);
  const double v[] = {0.0, 0.6, 0.8};
  const Element a = spin_element(alg, 2.0, v);
  const SpectralDecomposition sd = spectral_decompose(a);
  ASSERT_EQ(sd.spaces.size(), 2u);
  EXPECT_NEAR(sd.spaces[0].value, 1.0, 1e-12);
  EXPECT_NEAR(sd.spaces[1].value, 3.0, 1e-12);
  const Element& lo = sd.spaces[0].atoms.at(0);
  const Element& hi = sd.spaces[1].atoms.at(0);
  const Element half_plus(alg, {0.5, 0.0, 0.3, 0.4});
  const Element half_minus(alg, {0.5, 0.0, -0.3, -0.4});
  EXPECT_LE(max_abs_diff(hi, half_plus), 1e-12);
  EXPECT_LE(max_abs_diff(lo, half_minus), 1e-12);
  EXPECT_LE(max_abs_diff(jordan_product(hi, hi), hi), 1e-12);
  EXPECT_LE(max_abs_diff(jordan_product(lo, lo), lo), 1e-12);
  EXPECT_LE(max_abs(jordan_product(hi, lo).coords()), 1e-12);
  EXPECT_LE(max_abs_diff(3.0 * hi + 1.0 * lo, a), 1e-12);
}

TEST(Spectral, H2RealSwapMatrix) {
  const SpectralDecomposition sd = spectral_decompose(h2r(0, 1, 0));
  ASSERT_EQ(sd.spaces.size(), 2u);
  EXPECT_NEAR(sd.spaces[0].value, -1.0, 1e-12);
  EXPECT_NEAR(sd.spaces[1].value, 1.0, 1e-12);
  EXPECT_LE(max_abs_diff(sd.spaces[1].atoms.at(0), h2r(0.5, 0.5, 0.5)), 1e-12);
  EXPECT_LE(max_abs_diff(sd.spaces[0].atoms.at(0), h2r(0.5, -0.5, 0.5)), 1e-12);
}

TEST(Spectral, DegenerateSpinElementUsesFirstDirection) {
  const Algebra alg = Algebra::spin(3);
  const SpectralDecomposition sd = spectral_decompose(2.5 * unit(alg));
  ASSERT_EQ(sd.spaces.size(), 1u);
  EXPECT_NEAR(sd.spaces[0].value, 2.5, 1e-15);
  ASSERT_EQ(sd.spaces[0].atoms.size(), 2u);
  const Element plus(alg, {0.5, 0.5, 0, 0}), minus(alg, {0.5, -0.5, 0, 0});
  const bool ordered = max_abs_diff(sd.spaces[0].atoms[0], plus) < 1e-15;
  EXPECT_LE(max_abs_diff(sd.spaces[0].atoms[ordered ? 0 : 1], plus), 1e-15);
  EXPECT_LE(max_abs_diff(sd.spaces[0].atoms[ordered ? 1 : 0], minus), 1e-15);
}

TEST(Spectral, InvariantsOnRandomElements) {
  Rng rng(5);
  for (const auto& alg : oracle_algebras())
    for (int t = 0; t < 20; ++t) {
      const Element a = random_element(alg, rng);
      const SpectralDecomposition sd = spectral_decompose(a);
      EXPECT_LE(sd.atom_count(), static_cast<std::size_t>(alg.capacity()));
      EXPECT_LE(max_abs_diff(sd.reconstruct(), a), 1e-9 * norm_of(a)) << alg.name();
      EXPECT_LE(max_abs_diff(sd.atom_sum(), unit(alg)), 1e-9) << alg.name();
      std::vector<Element> atoms;
      for (const auto& s : sd.spaces) atoms.insert(atoms.end(), s.atoms.begin(), s.atoms.end());
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        EXPECT_LE(max_abs_diff(jordan_product(atoms[i], atoms[i]), atoms[i]), 1e-9);
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
          EXPECT_TRUE(in_cone(unit(alg) - atoms[i] - atoms[j]));
          if (alg.kind() == AlgebraKind::Matrix)
            EXPECT_LE(max_abs(jordan_product(atoms[i], atoms[j]).coords()), 1e-9);
        }
      }
    }
}

TEST(Spectral, EigenvaluesMatchOracles) {
  Rng rng(6);
  for (const auto& alg : oracle_algebras()) {
    if (alg.kind() == AlgebraKind::Sum) continue;
    for (int t = 0; t < 10; ++t) {
      const Element a = random_element(alg, rng);
      const auto expect =
          alg.kind() == AlgebraKind::Spin ? oracle::spin_eigenvalues(a) : oracle::matrix_eigenvalues(a);
      const Vector got = spectral_values(a);
      ASSERT_EQ(got.size(), expect.size()) << alg.name();
      for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], expect[k], 1e-9 * norm_of(a)) << alg.name();
    }
  }
}

TEST(Spectral, DirectSumIsUnionOfBlockDecompositions) {
  Rng rng(7);
  const Algebra alg = direct_sum({Algebra::matrix(Ring::Complex, 2), Algebra::matrix(Ring::Real, 3)});
  const Element a = random_element(alg, rng);
  Vector expect;
  for (std::size_t b = 0; b < 2; ++b) {
    const Vector part = spectral_values(a.block(b));
    expect.insert(expect.end(), part.begin(), part.end());
  }
  std::sort(expect.begin(), expect.end());
  const Vector got = spectral_values(a);
  ASSERT_EQ(got.size(), 5u);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(got[k], expect[k], 1e-10);
}

TEST(Spectral, CoincidingEigenvaluesAcrossBlocksMerge) {
  const Algebra alg = direct_sum({Algebra::matrix(Ring::Real, 2), Algebra::spin(2)});
  const SpectralDecomposition sd = spectral_decompose(unit(alg));
  ASSERT_EQ(sd.spaces.size(), 1u);
  EXPECT_EQ(sd.spaces[0].atoms.size(), 4u);
}

TEST(OrderNorm, Examples) {
  const Algebra alg = Algebra::matrix(Ring::Real, 2);
  EXPECT_NEAR(order_norm(unit(alg)), 1.0, 1e-15);
  EXPECT_EQ(order_norm(Element::zero(alg)), 0.0);
  EXPECT_NEAR(order_norm(h2r(2, 0, -3)), 3.0, 1e-15);
}

TEST(OrderNorm, PositiveOffZero) {
  Rng rng(8);
  for (const auto& alg : oracle_algebras()) {
    const Element a = random_element(alg, rng);
    EXPECT_GT(order_norm(a), 0.0);
    EXPECT_LE(order_norm(a), max_abs(a.coords()) * alg.real_dim() + 1e-12);
    EXPECT_LE(order_norm(1e-13 * a), 1e-12 * std::max(1.0, order_norm(a)));
  }
}

TEST(Cone, Examples) {
  Rng rng(9);
  for (const auto& alg : oracle_algebras()) {
    EXPECT_TRUE(in_cone(unit(alg)));
    EXPECT_FALSE(in_cone(-unit(alg)));
    for (int t = 0; t < 10; ++t) {
      const Element sq = random_cone_element(alg, rng);
      EXPECT_TRUE(in_cone(sq)) << alg.name();
      for (double v : spectral_values(sq)) EXPECT_GE(v, -1e-9 * norm_of(sq));
    }
  }
}

TEST(Face, UnitGivesSameAlgebra) {
  for (const auto& alg : oracle_algebras()) {
    const Face f = restrict_to(unit(alg));
    EXPECT_EQ(f.algebra, alg);
  }
}

TEST(Face, H3RealCornerIsH2Real) {
  const Algebra alg = Algebra::matrix(Ring::Real, 3);
  const Element p(alg, {1, 1, 0, 0, 0, 0});
  const Face f = restrict_to(p);
  EXPECT_EQ(f.algebra, Algebra::matrix(Ring::Real, 2));
  EXPECT_EQ(f.algebra.real_dim(), 3u);
  EXPECT_LE(max_abs_diff(f.embed(unit(f.algebra)), p), 1e-12);
}

TEST(Face, EmbeddedElementsSitBetweenMinusNormPAndNormP) {
  Rng rng(10);
  for (const auto& alg : oracle_algebras())
    for (int t = 0; t < 5; ++t) {
      const Element p = random_projection(alg, rng);
      if (max_abs(p.coords()) < 0.5) continue;
      const Face f = restrict_to(p);
      const Element b = random_element(f.algebra, rng);
      const Element a = f.embed(b);
      const double n = order_norm(a);
      EXPECT_NEAR(n, order_norm(b), 1e-9 * norm_of(b)) << alg.name();
      EXPECT_TRUE(in_cone(n * p - a, 1e-9 * norm_of(a)));
      EXPECT_TRUE(in_cone(a + n * p, 1e-9 * norm_of(a)));
      EXPECT_LE(max_abs_diff(f.compress(a), b), 1e-9 * norm_of(b));
    }
}

TEST(Face, AtomsOfRestrictedUnitAreBelowP) {
  Rng rng(11);
  for (const auto& alg : oracle_algebras()) {
    const Element p = random_projection(alg, rng, std::max(1, alg.capacity() - 1));
    const Face f = restrict_to(p);
    const SpectralDecomposition sd = spectral_decompose(unit(f.algebra));
    for (const auto& e : sd.spaces[0].atoms) EXPECT_TRUE(in_cone(p - f.embed(e), 1e-8)) << alg.name();
  }
}

TEST(Face, ZeroProjectionRejected) {
  EXPECT_THROW(restrict_to(Element::zero(Algebra::matrix(Ring::Real, 2))), PreconditionError);
}

TEST(AtomState, Examples) {
  Rng rng(12);
  for (const auto& alg : oracle_algebras())
    for (int t = 0; t < 5; ++t) {
      const SpectralDecomposition sd = spectral_decompose(random_element(alg, rng));
      std::vector<Element> atoms;
      for (const auto& s : sd.spaces) atoms.insert(atoms.end(), s.atoms.begin(), s.atoms.end());
      const State mu = atom_state(atoms[0]);
      EXPECT_NEAR(mu(atoms[0]), 1.0, 1e-10) << alg.name();
      EXPECT_NEAR(mu(unit(alg)), 1.0, 1e-10);
      for (std::size_t k = 1; k < atoms.size(); ++k) EXPECT_NEAR(mu(atoms[k]), 0.0, 1e-10);
      const Element a = random_element(alg, rng);
      const Vector s = spectral_values(a);
      EXPECT_GE(mu(a), s.front() - 1e-9 * norm_of(a));
      EXPECT_LE(mu(a), s.back() + 1e-9 * norm_of(a));
      EXPECT_GE(mu(random_cone_element(alg, rng)), -1e-10);
    }
}

TEST(AtomState, QubitOverlapIsOneHalf) {
  const Algebra alg = Algebra::matrix(Ring::Complex, 2);
  const Element zero(alg, {1, 0, 0, 0});
  const Element plus = oracle::from_complex(alg, (oracle::MatrixXcd(2, 2) << 0.5, 0.5, 0.5, 0.5).finished());
  EXPECT_NEAR(atom_state(zero)(plus), 0.5, 1e-15);
}

TEST(AtomState, RejectsNonAtoms) {
  EXPECT_THROW(atom_state(unit(Algebra::matrix(Ring::Real, 2))), PreconditionError);
}

TEST(Conversion, RingMatrixRoundTrip) {
  Rng rng(13);
  for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion}) {
    const Algebra alg = Algebra::matrix(r, 3);
    const Element a = random_element(alg, rng);
    EXPECT_LE(max_abs_diff(from_ring_matrix(alg, to_ring_matrix(a)), a), 1e-15);
  }
}

TEST(Conversion, CoordinatesAreTraceOrthonormal) {
  Rng rng(14);
  for (Ring r : {Ring::Real, Ring::Complex, Ring::Quaternion}) {
    const Algebra alg = Algebra::matrix(r, 3);
    const Element a = random_element(alg, rng), b = random_element(alg, rng);
    const auto ha = oracle::to_complex(a), hb = oracle::to_complex(b);
    const double trace = (ha * hb).trace().real() / (r == Ring::Quaternion ? 2.0 : 1.0);
    EXPECT_NEAR(trace, dot(a.coords(), b.coords()), 1e-12);
  }
}
