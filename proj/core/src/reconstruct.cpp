#include "jordan/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jordan/errors.hpp"
#include "jordan/lattice.hpp"
#include "jordan/linalg.hpp"
#include "jordan/random.hpp"
#include "jordan/sampling.hpp"

namespace jordan {

ProductTable::ProductTable(std::size_t dim, Vector unit)
    : dim_(dim), unit_(std::move(unit)), constants_(dim * dim * dim, 0.0) {
  if (unit_.size() != dim_) throw PreconditionError("ProductTable: unit has the wrong length");
}

ProductTable ProductTable::from_algebra(const Algebra& algebra) {
  const std::size_t n = algebra.real_dim();
  ProductTable t(n, jordan::unit(algebra).coords());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector ei(n, 0.0), ej(n, 0.0);
      ei[i] = 1.0;
      ej[j] = 1.0;
      const Element p = jordan_product(Element(algebra, std::move(ei)), Element(algebra, std::move(ej)));
      for (std::size_t k = 0; k < n; ++k) t.at(k, i, j) = t.at(k, j, i) = p[k];
    }
  return t;
}

Vector ProductTable::multiply(std::span<const double> a, std::span<const double> b) const {
  Vector out(dim_, 0.0);
  for (std::size_t k = 0; k < dim_; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i] == 0.0) continue;
      double row = 0.0;
      for (std::size_t j = 0; j < dim_; ++j) row += at(k, i, j) * b[j];
      s += a[i] * row;
    }
    out[k] = s;
  }
  return out;
}

DenseMatrix ProductTable::left_multiplication(std::span<const double> a) const {
  DenseMatrix l(dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) l(k, j) += at(k, i, j) * a[i];
  return l;
}

namespace {

struct SqrtPair {
  DenseMatrix root;
  DenseMatrix inv_root;
};

SqrtPair sqrt_pair(const EigenSystem& es) {
  const std::size_t n = es.values.size();
  SqrtPair out{DenseMatrix(n, n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const double r = std::sqrt(es.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double vv = es.vectors(i, k) * es.vectors(j, k);
        out.root(i, j) += r * vv;
        out.inv_root(i, j) += vv / r;
      }
  }
  return out;
}

nlohmann::json vector_json(std::span<const double> v) { return nlohmann::json(std::vector<double>(v.begin(), v.end())); }

}  // namespace

CheckReport verify_jordan(const ProductTable& table, int trials, std::uint64_t seed, double tol) {
  CheckReport report{"jordan", Verdict::Pass, trials, 0, 0.0, "", nullptr};
  const std::size_t n = table.dim();
  auto fail = [&](const std::string& what, nlohmann::json detail) {
    report.verdict = Verdict::Fail;
    report.message = what;
    detail["seed"] = seed;
    detail["dim"] = n;
    report.witness = std::move(detail);
    return report;
  };
  if (trials <= 0) {
    report.verdict = Verdict::Inconclusive;
    report.message = "no trials";
    return report;
  }

  // Trace form tau(x, y) = tr L_{xy}.
  Vector trace_l(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) trace_l[k] += table.at(l, k, l);
  DenseMatrix tau(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) tau(i, j) += table.at(k, i, j) * trace_l[k];

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    Vector a(n), b(n);
    for (auto& x : a) x = rng.gaussian();
    for (auto& x : b) x = rng.gaussian();
    const double na = norm(a), nb = norm(b);

    const double comm = max_abs(subtract(table.multiply(a, b), table.multiply(b, a))) / (na * nb);
    const double unit_law = max_abs(subtract(table.multiply(table.unit(), a), a)) / na;
    const Vector a2 = table.multiply(a, a);
    const Vector lhs = table.multiply(table.multiply(a2, b), a);
    const Vector rhs = table.multiply(a2, table.multiply(b, a));
    const double jordan_identity = max_abs(subtract(lhs, rhs)) / (na * na * na * nb);
    report.worst_residual = std::max({report.worst_residual, comm, unit_law, jordan_identity});

    nlohmann::json inputs = {{"trial", trial}, {"a", vector_json(a)}, {"b", vector_json(b)}};
    if (comm > tol) {
      inputs["check"] = "commutativity";
      inputs["residual"] = comm;
      return fail("product is not commutative", inputs);
    }
    if (unit_law > tol) {
      inputs["check"] = "unit";
      inputs["residual"] = unit_law;
      return fail("unit law fails", inputs);
    }
    if (jordan_identity > tol) {
      inputs["check"] = "jordan-identity";
      inputs["residual"] = jordan_identity;
      return fail("Jordan identity fails", inputs);
    }
    ++report.evaluated;
  }

  // Positivity of squares, once the identities hold.
  DenseMatrix tau_sym = tau;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tau_sym(i, j) = 0.5 * (tau(i, j) + tau(j, i));
  const EigenSystem tau_es = sym_eigen(tau_sym, 1e-6);
  if (tau_es.values.front() <= tol * std::max(1.0, tau_es.values.back()))
    return fail("trace form is not positive definite", {{"check", "trace-form"}, {"min_eigenvalue", tau_es.values.front()}});
  const SqrtPair roots = sqrt_pair(tau_es);

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed ^ 0x5a5a5a5aULL, static_cast<std::uint64_t>(trial)));
    Vector a(n);
    for (auto& x : a) x = rng.gaussian();
    const Vector a2 = table.multiply(a, a);
    DenseMatrix s = roots.root * table.left_multiplication(a2) * roots.inv_root;
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(s(i, j)));
    const double asym = s.asymmetry() / scale;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s(i, j) = s(j, i) = 0.5 * (s(i, j) + s(j, i));
    const EigenSystem es = sym_eigen(s, 1e-6);
    const double negativity = std::max(0.0, -es.values.front()) / scale;
    report.worst_residual = std::max({report.worst_residual, asym, negativity});
    if (asym > tol || negativity > tol)
      return fail("square is not positive", {{"check", "positivity"},
                                             {"trial", trial},
                                             {"a", vector_json(a)},
                                             {"residual", std::max(asym, negativity)}});
  }
  return report;
}

Element reference_atom(const Algebra& algebra, std::uint64_t seed) {
  Rng rng(seed);
  const SpectralDecomposition sd = spectral_decompose(random_element(algebra, rng));
  return sd.spaces.front().atoms.front();
}

SoEstimate compute_s_o(const InnerProductForm& product_o, int atom_samples, std::uint64_t seed) {
  const Algebra& alg = product_o.algebra;
  const int capacity = info_capacity(alg);
  if (capacity != 2) {
    std::ostringstream os;
    os << "compute_s_o: information capacity of " << alg.name() << " is " << capacity << ", not 2";
    throw PreconditionError(os.str());
  }
  if (atom_samples < 1) throw PreconditionError("compute_s_o: need at least one atom sample");

  const Element one = unit(alg);
  SoEstimate est;
  double lo = INFINITY, hi = -INFINITY;
  for (int k = 0; k < atom_samples; ++k) {
    const Element e = reference_atom(alg, derive_seed(seed, static_cast<std::uint64_t>(k)));
    const double v = product_o(e, one - e);
    est.value += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  est.value /= atom_samples;
  est.spread = hi - lo;
  est.atoms = atom_samples;

  const double allowed = std::max(10.0 * product_o.invariance_residual, 1e-9);
  if (est.spread > allowed) {
    std::ostringstream os;
    os << "compute_s_o: <e|e'>_o varies by " << est.spread << " across atoms (allowed " << allowed
       << "); the form is not invariant enough";
    throw InconclusiveError(os.str());
  }
  if (!(std::abs(est.value) < 1.0 - 1e-6)) {
    std::ostringstream os;
    os << "compute_s_o: |s_o| = " << std::abs(est.value) << " violates |s_o| < 1";
    throw PreconditionError(os.str());
  }
  return est;
}

InnerProductForm build_product_1(const InnerProductForm& product_o, double s_o) {
  if (!(std::abs(s_o) < 1.0)) throw PreconditionError("build_product_1: |s_o| must be < 1");
  const std::size_t n = product_o.algebra.real_dim();
  const Vector u = product_o.gram * std::span<const double>(unit(product_o.algebra).coords());
  const double w = s_o / ((1.0 + s_o) * (1.0 + s_o));
  InnerProductForm out{product_o.algebra, DenseMatrix(n, n), product_o.invariance_residual};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.gram(i, j) = (product_o.gram(i, j) - w * u[i] * u[j]) / (1.0 - s_o);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.gram(i, j) = out.gram(j, i) = 0.5 * (out.gram(i, j) + out.gram(j, i));
  validate_form(out);
  return out;
}

DenseMatrix split_unit_complement(const InnerProductForm& product_1) {
  const Algebra& alg = product_1.algebra;
  const std::size_t n = alg.real_dim();
  const Element one = unit(alg);
  const double unit_norm2 = product_1(one, one);
  const Vector g_unit = product_1.gram * std::span<const double>(one.coords());
  std::vector<Vector> candidates;
  for (std::size_t k = 0; k < n; ++k) {
    Vector v(n, 0.0);
    v[k] = 1.0;
    axpy(-g_unit[k] / unit_norm2, one.coords(), v);
    candidates.push_back(std::move(v));
  }
  const std::vector<Vector> basis = gram_schmidt(candidates, product_1.gram, 1e-9);
  if (basis.size() != n - 1) throw Error("split_unit_complement: complement of the unit has the wrong dimension");
  return DenseMatrix::from_columns(basis, n);
}

namespace {

DenseMatrix unit_and_v(const Algebra& alg, const DenseMatrix& v_basis) {
  const std::size_t n = alg.real_dim();
  DenseMatrix b(n, n);
  b.set_column(0, unit(alg).coords());
  for (std::size_t c = 0; c + 1 < n; ++c) b.set_column(c + 1, v_basis.column(c));
  return b;
}

}  // namespace

SpinConstruction build_spin_product(const InnerProductForm& product_o, const InnerProductForm& product_1, double s_o,
                                    const DenseMatrix& v_basis) {
  const Algebra& alg = product_1.algebra;
  const std::size_t n = alg.real_dim();
  if (v_basis.rows() != n || v_basis.cols() + 1 != n) throw PreconditionError("build_spin_product: V basis has the wrong shape");
  const DenseMatrix b = unit_and_v(alg, v_basis);
  const DenseMatrix b_inv = inverse(b);

  ProductTable table(n, unit(alg).coords());
  // Canonical product in the (1, V) basis, mapped back to coordinates.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector alpha(n), beta(n);
      for (std::size_t r = 0; r < n; ++r) {
        alpha[r] = b_inv(r, i);
        beta[r] = b_inv(r, j);
      }
      Vector gamma(n, 0.0);
      gamma[0] = alpha[0] * beta[0];
      for (std::size_t l = 1; l < n; ++l) {
        gamma[0] += kSpinProductCoefficient * alpha[l] * beta[l];
        gamma[l] = alpha[0] * beta[l] + beta[0] * alpha[l];
      }
      const Vector c = b * std::span<const double>(gamma);
      for (std::size_t k = 0; k < n; ++k) table.at(k, i, j) = table.at(k, j, i) = c[k];
    }
  return SpinConstruction{alg, product_o, product_1, s_o, v_basis, std::move(table)};
}

Element SpinConstruction::atom(std::span<const double> direction) const {
  if (direction.size() + 1 != source.real_dim()) throw PreconditionError("SpinConstruction::atom: direction length");
  const double dn = norm(direction);
  if (!(dn > 0.0)) throw PreconditionError("SpinConstruction::atom: zero direction");
  Vector d(direction.begin(), direction.end());
  for (auto& x : d) x *= std::sqrt(2.0) / dn;
  const Vector u = v_basis * std::span<const double>(d);
  Element e = unit(source);
  e += Element(source, u);
  e *= 0.5;
  return e;
}

Element SpinConstruction::product(const Element& a, const Element& b) const {
  return Element(source, table.multiply(a.coords(), b.coords()));
}

std::pair<double, double> SpinConstruction::spectral_values(const Element& a) const {
  const Vector alpha = solve(unit_and_v(source, v_basis), a.coords());
  double v2 = 0.0;
  for (std::size_t l = 1; l < alpha.size(); ++l) v2 += alpha[l] * alpha[l];
  const double r = std::sqrt(kSpinProductCoefficient * v2);
  return {alpha[0] - r, alpha[0] + r};
}

SpinConstruction reconstruct_spin_factor(const InnerProductForm& product_o, int atom_samples, std::uint64_t seed) {
  validate_form(product_o);
  const Algebra& alg = product_o.algebra;
  const InnerProductForm normalized = normalize_on_atom(product_o, reference_atom(alg, derive_seed(seed, 0)));
  const SoEstimate s_o = compute_s_o(normalized, atom_samples, seed);
  const InnerProductForm p1 = build_product_1(normalized, s_o.value);
  return build_spin_product(normalized, p1, s_o.value, split_unit_complement(p1));
}

NativeMatch match_native(const SpinConstruction& c, int trials, std::uint64_t seed) {
  const Algebra& alg = c.source;
  const std::size_t n = alg.real_dim();
  const ProductTable native = ProductTable::from_algebra(alg);
  const InnerProductForm native_form = trace_form(alg);
  const DenseMatrix native_v = split_unit_complement(native_form);

  // Procrustes: rotation Q of the constructed V basis closest to the native one.
  const DenseMatrix cross = c.v_basis.transpose() * (native_form.gram * native_v);
  const DenseMatrix q = polar_orthogonal(cross);
  const DenseMatrix aligned_v = c.v_basis * q;
  const DenseMatrix basis = unit_and_v(alg, aligned_v);
  const DenseMatrix basis_inv = inverse(basis);

  NativeMatch out{0.0, 0.0, q};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector bi = basis.column(i), bj = basis.column(j);
      const Vector in_basis = basis_inv * std::span<const double>(native.multiply(bi, bj));
      for (std::size_t k = 0; k < n; ++k) {
        double canonical = 0.0;
        if (i == 0 && j == 0) canonical = k == 0 ? 1.0 : 0.0;
        else if (i == 0) canonical = k == j ? 1.0 : 0.0;
        else if (i == j) canonical = k == 0 ? kSpinProductCoefficient : 0.0;
        out.table_residual = std::max(out.table_residual, std::abs(in_basis[k] - canonical));
      }
    }

  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const Element a = random_element(alg, rng);
    const Element b = random_element(alg, rng);
    const double scale = std::max(1.0, norm(a.coords()) * norm(b.coords()));
    out.product_residual =
        std::max(out.product_residual, max_abs_diff(c.product(a, b), jordan_product(a, b)) / scale);
  }
  return out;
}

}  // namespace jordan
