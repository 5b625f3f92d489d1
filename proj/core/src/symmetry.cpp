#include "jordan/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "jordan/errors.hpp"
#include "jordan/linalg.hpp"
#include "jordan/random.hpp"
#include "jordan/sampling.hpp"
#include "jordan/serialize.hpp"

namespace jordan {

namespace {

DenseMatrix conjugation_matrix(const Algebra& leaf, const RingMatrix& u) {
  const std::size_t n = leaf.real_dim();
  const RingMatrix u_adj = u.adjoint();
  DenseMatrix t(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector basis(n, 0.0);
    basis[k] = 1.0;
    const RingMatrix b = to_ring_matrix(Element(leaf, std::move(basis)));
    t.set_column(k, from_ring_matrix(leaf, u * b * u_adj).coords());
  }
  return t;
}

DenseMatrix rotation_matrix(const Algebra& leaf, const DenseMatrix& r) {
  const std::size_t n = leaf.real_dim();
  DenseMatrix t(n, n);
  t(0, 0) = 1.0;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) t(i, j) = r(i - 1, j - 1);
  return t;
}

DenseMatrix block_diagonal(const Algebra& algebra, const std::vector<DenseMatrix>& parts) {
  DenseMatrix t(algebra.real_dim(), algebra.real_dim());
  const auto blocks = algebra.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < parts[b].rows(); ++i)
      for (std::size_t j = 0; j < parts[b].cols(); ++j) t(blocks[b].offset + i, blocks[b].offset + j) = parts[b](i, j);
  return t;
}

std::size_t home_block(const Element& e, const Tolerances& tol) {
  const Algebra& alg = e.algebra();
  const auto blocks = alg.blocks();
  std::optional<std::size_t> home;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Element part = alg.kind() == AlgebraKind::Sum ? e.block(b) : e;
    if (max_abs(part.coords()) <= tol.compare) continue;
    if (home) throw PreconditionError("element is supported on more than one block; not an atom");
    home = b;
  }
  if (!home) throw PreconditionError("zero element is not an atom");
  return *home;
}

RingVector atom_vector(const Element& atom, const Tolerances& tol) {
  for (const auto& sp : matrix_eigenspaces(atom, tol))
    if (std::abs(sp.value - 1.0) <= tol.projection && sp.vectors.size() == 1) return sp.vectors[0];
  throw PreconditionError("element is not an atom");
}

Vector spin_direction(const Element& atom, const Tolerances& tol) {
  const auto& c = atom.coords();
  if (std::abs(c[0] - 0.5) > tol.projection) throw PreconditionError("element is not a spin-factor atom");
  Vector v(c.begin() + 1, c.end());
  for (auto& x : v) x *= 2.0;
  if (std::abs(norm(v) - 1.0) > tol.projection) throw PreconditionError("element is not a spin-factor atom");
  return v;
}

RingVector as_ring(const Vector& v) {
  RingVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Quaternion(v[i]);
  return r;
}

}  // namespace

Element Automorphism::apply(const Element& a) const {
  if (!(a.algebra() == algebra)) throw AlgebraMismatchError("automorphism applied to an element of another algebra");
  return Element(algebra, matrix * std::span<const double>(a.coords()));
}

Automorphism Automorphism::after(const Automorphism& first) const {
  if (!(first.algebra == algebra)) throw AlgebraMismatchError("composing automorphisms of different algebras");
  return Automorphism{algebra, matrix * first.matrix};
}

Automorphism identity_automorphism(const Algebra& algebra) {
  return Automorphism{algebra, DenseMatrix::identity(algebra.real_dim())};
}

Automorphism conjugation(const Algebra& algebra, const RingMatrix& u) {
  if (algebra.kind() != AlgebraKind::Matrix) throw PreconditionError("conjugation needs a matrix algebra");
  return Automorphism{algebra, conjugation_matrix(algebra, u)};
}

Automorphism spin_rotation(const Algebra& algebra, const DenseMatrix& r) {
  if (algebra.kind() != AlgebraKind::Spin) throw PreconditionError("spin_rotation needs a spin factor");
  return Automorphism{algebra, rotation_matrix(algebra, r)};
}

Automorphism sample_automorphism(const Algebra& algebra, std::uint64_t seed) {
  const auto blocks = algebra.blocks();
  std::vector<DenseMatrix> parts;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    Rng rng(derive_seed(seed, b));
    const Algebra& leaf = blocks[b].algebra;
    const auto n = static_cast<std::size_t>(leaf.size());
    if (leaf.kind() == AlgebraKind::Matrix) {
      parts.push_back(conjugation_matrix(leaf, haar_unitary(n, leaf.ring(), rng)));
    } else {
      parts.push_back(rotation_matrix(leaf, haar_unitary(n, Ring::Real, rng).to_real(Ring::Real)));
    }
  }
  if (algebra.kind() != AlgebraKind::Sum) return Automorphism{algebra, std::move(parts[0])};
  return Automorphism{algebra, block_diagonal(algebra, parts)};
}

RingMatrix PlaneRotation::at(double t) const {
  const std::size_t n = u.size();
  const double c = std::cos(t * angle) - 1.0;
  const double s = std::sin(t * angle);
  RingMatrix r = RingMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) += (u[i] * u[j].conj() + w[i] * w[j].conj()) * c;
      r(i, j) += (w[i] * u[j].conj() - u[i] * w[j].conj()) * s;
    }
  return r;
}

Automorphism AutomorphismPath::at(double t) const {
  if (!block) return identity_automorphism(algebra);
  const auto blocks = algebra.blocks();
  std::vector<DenseMatrix> parts;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Algebra& leaf = blocks[b].algebra;
    if (b != *block) {
      parts.push_back(DenseMatrix::identity(leaf.real_dim()));
    } else if (leaf.kind() == AlgebraKind::Matrix) {
      parts.push_back(conjugation_matrix(leaf, rotation.at(t)));
    } else {
      parts.push_back(rotation_matrix(leaf, rotation.at(t).to_real(Ring::Real)));
    }
  }
  if (algebra.kind() != AlgebraKind::Sum) return Automorphism{algebra, std::move(parts[0])};
  return Automorphism{algebra, block_diagonal(algebra, parts)};
}

AutomorphismPath transport_path(const Element& e1, const Element& e2, const Tolerances& tol) {
  if (!(e1.algebra() == e2.algebra())) throw AlgebraMismatchError("transport between different algebras");
  const Algebra& alg = e1.algebra();
  const std::size_t b1 = home_block(e1, tol);
  const std::size_t b2 = home_block(e2, tol);
  const auto blocks = alg.blocks();
  if (b1 != b2) {
    std::ostringstream os;
    os << "no automorphism maps an atom of block " << b1 << " (" << blocks[b1].algebra.name() << ", dim "
       << blocks[b1].algebra.real_dim() << ") to block " << b2 << " (" << blocks[b2].algebra.name() << ", dim "
       << blocks[b2].algebra.real_dim() << "): automorphisms act blockwise";
    throw NoAutomorphismError(os.str());
  }

  AutomorphismPath path{alg, std::nullopt, {}, 0.0};
  if (approx_equal(e1, e2, tol.compare)) return path;

  const Algebra& leaf = blocks[b1].algebra;
  const Element a1 = alg.kind() == AlgebraKind::Sum ? e1.block(b1) : e1;
  const Element a2 = alg.kind() == AlgebraKind::Sum ? e2.block(b1) : e2;

  PlaneRotation rot;
  RingVector v1, v2;
  if (leaf.kind() == AlgebraKind::Matrix) {
    rot.ring = leaf.ring();
    v1 = atom_vector(a1, tol);
    v2 = atom_vector(a2, tol);
    // Fix the phase of v2 so that <v1, v2> is real and non-negative.
    const Quaternion phi = ring_inner(v2, v1);
    if (phi.norm() > 1e-14) v2 = right_scale(v2, phi * (1.0 / phi.norm()));
  } else {
    rot.ring = Ring::Real;
    v1 = as_ring(spin_direction(a1, tol));
    v2 = as_ring(spin_direction(a2, tol));
  }
  const double c = ring_inner(v1, v2).w;
  RingVector w = v2;
  const Quaternion proj = ring_inner(v1, v2);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= v1[i] * proj;
  double s = ring_norm(w);
  if (s <= 1e-12 && c > 0.0) return path;
  if (s <= 1e-12) {
    // Antipodal spin atoms: rotate in the first coordinate plane that contains v1.
    for (std::size_t i = 0; i < v1.size(); ++i) {
      RingVector cand(v1.size());
      cand[i] = Quaternion(1.0);
      const Quaternion pr = ring_inner(v1, cand);
      for (std::size_t k = 0; k < cand.size(); ++k) cand[k] -= v1[k] * pr;
      if (ring_norm(cand) > 1e-6) {
        w = cand;
        break;
      }
    }
    s = 0.0;
  }
  const double wn = ring_norm(w);
  for (auto& q : w) q *= 1.0 / wn;
  rot.u = std::move(v1);
  rot.w = std::move(w);
  rot.angle = s == 0.0 ? std::numbers::pi : std::atan2(s, c);

  path.block = b1;
  path.rotation = rot;

  // Generator on coordinates, by central difference of the (analytic) path.
  const double h = 1e-6;
  DenseMatrix gen = path.at(h).matrix - path.at(-h).matrix;
  gen *= 1.0 / (2.0 * h);
  path.lipschitz = gen.frobenius();
  return path;
}

Automorphism transport_automorphism(const Element& e1, const Element& e2, const Tolerances& tol) {
  return transport_path(e1, e2, tol).at(1.0);
}

Automorphism continuous_path(const Element& e1, const Element& e2, double t, const Tolerances& tol) {
  if (t < 0.0 || t > 1.0) throw PreconditionError("continuous_path: t must lie in [0, 1]");
  return transport_path(e1, e2, tol).at(t);
}

CheckReport verify_automorphism(const Automorphism& t, int trials, std::uint64_t seed) {
  CheckReport report{"automorphism", Verdict::Pass, trials, 0, 0.0, "", nullptr};
  const Algebra& alg = t.algebra;
  auto fail = [&](const std::string& what, nlohmann::json detail) {
    report.verdict = Verdict::Fail;
    report.message = what;
    detail["algebra"] = algebra_to_json(alg);
    detail["seed"] = seed;
    detail["matrix"] = matrix_to_json(t.matrix);
    report.witness = std::move(detail);
    return report;
  };

  const Element one = unit(alg);
  const double unit_residual = max_abs_diff(t.apply(one), one);
  report.worst_residual = unit_residual;
  if (unit_residual > 1e-10) return fail("T(1) != 1", {{"check", "unit"}, {"residual", unit_residual}});

  DenseMatrix inv;
  try {
    inv = inverse(t.matrix);
  } catch (const Error&) {
    return fail("T is not invertible", {{"check", "inverse"}});
  }
  const double inv_residual = (t.matrix * inv - DenseMatrix::identity(alg.real_dim())).max_abs();
  report.worst_residual = std::max(report.worst_residual, inv_residual);
  if (inv_residual > 1e-9) return fail("T T^{-1} != I", {{"check", "inverse"}, {"residual", inv_residual}});
  const Automorphism t_inv{alg, inv};

  for (int k = 0; k < trials; ++k) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    const Element a = random_cone_element(alg, rng);
    for (const auto* map : {&t, &t_inv}) {
      const Element image = map->apply(a);
      const Vector values = spectral_values(image);
      const double scale = std::max(1.0, order_norm(a));
      report.worst_residual = std::max(report.worst_residual, std::max(0.0, -values.front()) / scale);
      if (!in_cone(image))
        return fail(map == &t ? "T maps a cone element outside the cone" : "T^{-1} maps a cone element outside the cone",
                    {{"check", "cone"}, {"trial", k}, {"element", element_to_json(a)}});
    }
    ++report.evaluated;
  }
  if (trials == 0) {
    report.verdict = Verdict::Inconclusive;
    report.message = "no cone samples";
  }
  return report;
}

double InnerProductForm::operator()(const Element& a, const Element& b) const {
  if (!(a.algebra() == algebra) || !(b.algebra() == algebra))
    throw AlgebraMismatchError("inner product applied to elements of another algebra");
  return dot(a.coords(), gram * std::span<const double>(b.coords()));
}

void validate_form(const InnerProductForm& form) {
  if (form.gram.rows() != form.algebra.real_dim() || !form.gram.square())
    throw PreconditionError("inner product Gram has the wrong shape");
  const double asym = form.gram.asymmetry();
  if (asym > 1e-10 * std::max(1.0, form.gram.max_abs())) {
    std::ostringstream os;
    os << "inner product Gram is not symmetric (asymmetry " << asym << ")";
    throw PreconditionError(os.str());
  }
  const EigenSystem es = sym_eigen(form.gram, 1e-10);
  if (es.values.front() <= 0.0) {
    std::ostringstream os;
    os << "inner product Gram is not positive definite (min eigenvalue " << es.values.front() << ")";
    throw PreconditionError(os.str());
  }
}

InnerProductForm trace_form(const Algebra& algebra) {
  DenseMatrix g(algebra.real_dim(), algebra.real_dim());
  for (const auto& b : algebra.blocks()) {
    const double w = b.algebra.kind() == AlgebraKind::Spin ? 2.0 : 1.0;
    for (std::size_t i = 0; i < b.algebra.real_dim(); ++i) g(b.offset + i, b.offset + i) = w;
  }
  return InnerProductForm{algebra, std::move(g), 0.0};
}

InnerProductForm normalize_on_atom(const InnerProductForm& form, const Element& atom) {
  InnerProductForm out = form;
  const double n = form(atom, atom);
  if (!(n > 0.0)) throw PreconditionError("normalize_on_atom: atom has non-positive norm");
  out.gram *= 1.0 / n;
  out.invariance_residual /= n;
  return out;
}

namespace {

// Sum of T_i^T G T_i over i in [lo, hi), pairwise in index order.
DenseMatrix pulled_back_sum(const InnerProductForm& base, std::uint64_t seed, int lo, int hi) {
  if (hi - lo == 1) {
    const Automorphism t = sample_automorphism(base.algebra, derive_seed(seed, static_cast<std::uint64_t>(lo)));
    return t.matrix.transpose() * (base.gram * t.matrix);
  }
  const int mid = lo + (hi - lo) / 2;
  return pulled_back_sum(base, seed, lo, mid) + pulled_back_sum(base, seed, mid, hi);
}

}  // namespace

InvariantProductResult invariant_inner_product(const InnerProductForm& base, int n_samples, std::uint64_t seed,
                                               double residual_threshold, int test_automorphisms) {
  validate_form(base);
  if (n_samples < 1) throw PreconditionError("invariant_inner_product: n_samples must be >= 1");
  const Algebra& alg = base.algebra;

  DenseMatrix g = pulled_back_sum(base, seed, 0, n_samples);
  g *= 1.0 / static_cast<double>(n_samples);
  // Restore exact symmetry lost to rounding.
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j) g(i, j) = g(j, i) = 0.5 * (g(i, j) + g(j, i));

  Rng atom_rng(derive_seed(seed ^ 0xa70a70a70ULL, 0));
  Element reference = random_atom(alg, atom_rng);
  InnerProductForm form = normalize_on_atom(InnerProductForm{alg, std::move(g), 0.0}, reference);

  double residual = 0.0;
  for (int j = 0; j < test_automorphisms; ++j) {
    const Automorphism t = sample_automorphism(alg, derive_seed(seed ^ 0x7e577e57ULL, static_cast<std::uint64_t>(j)));
    residual = std::max(residual, (form.gram - t.matrix.transpose() * (form.gram * t.matrix)).max_abs());
  }
  form.invariance_residual = residual;

  InvariantProductResult out{std::move(form), std::move(reference), true, ""};
  if (residual > residual_threshold) {
    std::ostringstream os;
    os << "invariance residual " << residual << " exceeds " << residual_threshold << "; raise n_samples (currently "
       << n_samples << ")";
    out.converged = false;
    out.message = os.str();
  }
  return out;
}

}  // namespace jordan
