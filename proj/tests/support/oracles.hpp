#pragma once

// Reference computations built on Eigen, independent of the library's own
// linear algebra. Used only by tests.

#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "jordan/algebra.hpp"
#include "jordan/random.hpp"

namespace oracle {

using cd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

inline const double kSqrt2 = std::sqrt(2.0);

// Decodes matrix-algebra coordinates into a complex Hermitian matrix. Real
// and complex algebras give m x m; quaternionic algebras give the 2m x 2m
// complex adjoint, q = z1 + z2 j -> [[z1, z2], [-conj(z2), conj(z1)]].
inline MatrixXcd to_complex(const jordan::Element& a) {
  const auto& alg = a.algebra();
  const int m = alg.size();
  const int d = jordan::ring_dim(alg.ring());
  const auto& c = a.coords();
  std::vector<std::vector<std::array<double, 4>>> q(m, std::vector<std::array<double, 4>>(m, {0, 0, 0, 0}));
  for (int i = 0; i < m; ++i) q[i][i][0] = c[i];
  std::size_t k = m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      for (int r = 0; r < d; ++r) q[i][j][r] = c[k + r] / kSqrt2;
      k += d;
      q[j][i] = {q[i][j][0], -q[i][j][1], -q[i][j][2], -q[i][j][3]};
    }
  if (d < 4) {
    MatrixXcd h(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) h(i, j) = cd(q[i][j][0], q[i][j][1]);
    return h;
  }
  MatrixXcd h(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const cd z1(q[i][j][0], q[i][j][1]);
      const cd z2(q[i][j][2], q[i][j][3]);
      h(2 * i, 2 * j) = z1;
      h(2 * i, 2 * j + 1) = z2;
      h(2 * i + 1, 2 * j) = -std::conj(z2);
      h(2 * i + 1, 2 * j + 1) = std::conj(z1);
    }
  return h;
}

// Inverse of to_complex for real and complex algebras (Hermitian part).
inline jordan::Element from_complex(const jordan::Algebra& alg, const MatrixXcd& h) {
  const int m = alg.size();
  const int d = jordan::ring_dim(alg.ring());
  jordan::Vector c(alg.real_dim(), 0.0);
  for (int i = 0; i < m; ++i) c[i] = h(i, i).real();
  std::size_t k = m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const cd z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      c[k] = kSqrt2 * z.real();
      if (d == 2) c[k + 1] = kSqrt2 * z.imag();
      k += d;
    }
  return jordan::Element(alg, std::move(c));
}

// Eigenvalues of a matrix-algebra element, ascending, with multiplicity
// (quaternionic doubling removed).
inline std::vector<double> matrix_eigenvalues(const jordan::Element& a) {
  const MatrixXcd h = to_complex(a);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  const VectorXd ev = es.eigenvalues();
  std::vector<double> out;
  const int step = jordan::ring_dim(a.algebra().ring()) == 4 ? 2 : 1;
  for (int i = 0; i < ev.size(); i += step) out.push_back(ev(i));
  return out;
}

// Closed-form spin spectrum s -+ |v|.
inline std::vector<double> spin_eigenvalues(const jordan::Element& a) {
  double v2 = 0.0;
  for (std::size_t i = 1; i < a.coords().size(); ++i) v2 += a[i] * a[i];
  return {a[0] - std::sqrt(v2), a[0] + std::sqrt(v2)};
}

// Orthonormal basis (columns) of the range of a Hermitian projection.
inline MatrixXcd range_basis(const MatrixXcd& p) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(p);
  std::vector<int> keep;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
  MatrixXcd u(p.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) u.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  return u;
}

// Projection onto range(P) intersect range(Q) from principal angles: the
// singular vectors of U_P^* U_Q with singular value 1 span the intersection.
inline MatrixXcd intersection_projection(const MatrixXcd& p, const MatrixXcd& q, double tol = 1e-7) {
  const MatrixXcd up = range_basis(p);
  const MatrixXcd uq = range_basis(q);
  MatrixXcd out = MatrixXcd::Zero(p.rows(), p.cols());
  if (up.cols() == 0 || uq.cols() == 0) return out;
  Eigen::JacobiSVD<MatrixXcd> svd(up.adjoint() * uq, Eigen::ComputeFullU);
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) < 1.0 - tol) continue;
    const Eigen::VectorXcd x = up * svd.matrixU().col(i);
    out += x * x.adjoint();
  }
  return out;
}

// Projection onto range(P) + range(Q).
inline MatrixXcd sum_projection(const MatrixXcd& p, const MatrixXcd& q) {
  MatrixXcd both(p.rows(), 2 * p.cols());
  both << p, q;
  Eigen::JacobiSVD<MatrixXcd> svd(both, Eigen::ComputeFullU);
  MatrixXcd out = MatrixXcd::Zero(p.rows(), p.cols());
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) < 1e-7) continue;
    out += svd.matrixU().col(i) * svd.matrixU().col(i).adjoint();
  }
  return out;
}

inline int rank_of(const MatrixXcd& p) { return static_cast<int>(std::lround(p.trace().real())); }


// Random Haar unitary of size m from Eigen's QR with phase fix.
inline MatrixXcd oracle_unitary(int m, jordan::Rng& rng) {
  MatrixXcd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = cd(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < m; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
  return q;
}

// Projection pair sharing k common directions; p adds a, q adds b more.
inline std::pair<MatrixXcd, MatrixXcd> structured_pair(int m, jordan::Rng& rng) {
  const int k = rng.uniform_int(0, m);
  const int a = rng.uniform_int(0, m - k);
  const int b = rng.uniform_int(0, m - k);
  const MatrixXcd u = oracle_unitary(m, rng);
  const MatrixXcd v = oracle_unitary(m - k, rng);
  MatrixXcd p = MatrixXcd::Zero(m, m), q = p;
  for (int i = 0; i < k; ++i) {
    p += u.col(i) * u.col(i).adjoint();
    q += u.col(i) * u.col(i).adjoint();
  }
  for (int i = 0; i < a; ++i) p += u.col(k + i) * u.col(k + i).adjoint();
  // q's extra directions: random orthonormal vectors in the complement of the common part.
  const MatrixXcd comp = u.rightCols(m - k);
  for (int i = 0; i < b; ++i) {
    const Eigen::VectorXcd w = comp * v.col(i);
    q += w * w.adjoint();
  }
  return {p, q};
}

}  // namespace oracle
