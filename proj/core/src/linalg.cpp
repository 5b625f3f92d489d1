#include "jordan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

EigenSystem sym_eigen(const DenseMatrix& m, double symmetry_tol) {
  if (!m.square()) {
    std::ostringstream os;
    os << "sym_eigen: matrix is " << m.rows() << "x" << m.cols() << ", not square";
    throw AsymmetricMatrixError(os.str(), INFINITY);
  }
  const double asym = m.asymmetry();
  if (asym > symmetry_tol * std::max(1.0, m.max_abs())) {
    std::ostringstream os;
    os << "sym_eigen: matrix is not symmetric, max|M - M^T| = " << asym;
    throw AsymmetricMatrixError(os.str(), asym);
  }

  const std::size_t n = m.rows();
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
  DenseMatrix v = DenseMatrix::identity(n);

  const double threshold = 1e-12 * a.frobenius();
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  EigenSystem out{Vector(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors, double drop_tol) {
  std::vector<Vector> basis;
  for (const auto& input : vectors) {
    Vector u = input;
    // Two passes of MGS keep the pairwise inner products at roundoff level.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) axpy(-dot(b, u), b, u);
    const double n = norm(u);
    if (n < drop_tol) continue;
    for (auto& x : u) x /= n;
    basis.push_back(std::move(u));
  }
  return basis;
}

std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors, const DenseMatrix& metric,
                                 double drop_tol) {
  std::vector<Vector> basis;
  std::vector<Vector> metric_basis;  // G b for each basis vector
  for (const auto& input : vectors) {
    Vector u = input;
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < basis.size(); ++k) axpy(-dot(metric_basis[k], u), basis[k], u);
    Vector gu = metric * u;
    const double n2 = dot(u, gu);
    if (n2 <= 0.0 || std::sqrt(n2) < drop_tol) continue;
    const double n = std::sqrt(n2);
    for (auto& x : u) x /= n;
    for (auto& x : gu) x /= n;
    basis.push_back(std::move(u));
    metric_basis.push_back(std::move(gu));
  }
  return basis;
}

namespace {

struct LU {
  DenseMatrix lu;
  std::vector<std::size_t> perm;
};

LU factor(const DenseMatrix& a) {
  if (!a.square()) throw Error("LU: matrix is not square");
  const std::size_t n = a.rows();
  LU f{a, std::vector<std::size_t>(n)};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  const double scale = std::max(a.max_abs(), 1e-300);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(f.lu(i, k)) > std::abs(f.lu(piv, k))) piv = i;
    if (std::abs(f.lu(piv, k)) < 1e-14 * scale) throw Error("LU: matrix is numerically singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = f.lu(i, k) / f.lu(k, k);
      f.lu(i, k) = l;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
    }
  }
  return f;
}

Vector lu_solve(const LU& f, std::span<const double> b) {
  const std::size_t n = f.lu.rows();
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
    x[i] /= f.lu(i, i);
  }
  return x;
}

}  // namespace

DenseMatrix inverse(const DenseMatrix& a) {
  const LU f = factor(a);
  const std::size_t n = a.rows();
  DenseMatrix inv(n, n);
  Vector e(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(e.begin(), e.end(), 0.0);
    e[c] = 1.0;
    inv.set_column(c, lu_solve(f, e));
  }
  return inv;
}

Vector solve(const DenseMatrix& a, std::span<const double> b) { return lu_solve(factor(a), b); }

DenseMatrix polar_orthogonal(const DenseMatrix& m) {
  // Q = M (M^T M)^{-1/2}
  const EigenSystem es = sym_eigen(m.transpose() * m, 1e-8);
  const std::size_t n = m.cols();
  DenseMatrix inv_sqrt(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (es.values[k] <= 1e-300) throw Error("polar_orthogonal: matrix is singular");
    const double w = 1.0 / std::sqrt(es.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv_sqrt(i, j) += w * es.vectors(i, k) * es.vectors(j, k);
  }
  return m * inv_sqrt;
}

RingMatrix haar_unitary(std::size_t n, Ring ring, Rng& rng) {
  if (n == 0) throw PreconditionError("haar_unitary: dimension must be >= 1");
  const int d = ring_dim(ring);
  std::vector<RingVector> cols(n, RingVector(n));
  for (auto& col : cols)
    for (auto& q : col)
      for (int k = 0; k < d; ++k) q[k] = rng.gaussian();
  // Column-wise Gram-Schmidt: R has positive real diagonal, so Q is Haar.
  for (std::size_t c = 0; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t b = 0; b < c; ++b) {
        const Quaternion proj = ring_inner(cols[b], cols[c]);
        for (std::size_t i = 0; i < n; ++i) cols[c][i] -= cols[b][i] * proj;
      }
    const double nrm = ring_norm(cols[c]);
    for (auto& q : cols[c]) q *= 1.0 / nrm;
  }
  return RingMatrix::from_columns(cols, n);
}

DenseMatrix haar_structured(std::size_t n, Ring ring, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(n, ring, rng).to_real(ring);
}

}  // namespace jordan
