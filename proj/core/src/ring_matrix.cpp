#include "jordan/ring_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jordan {

std::string_view ring_symbol(Ring r) {
  switch (r) {
    case Ring::Real: return "R";
    case Ring::Complex: return "C";
    case Ring::Quaternion: return "H";
  }
  return "?";
}

Ring parse_ring(std::string_view symbol) {
  if (symbol == "R" || symbol == "real") return Ring::Real;
  if (symbol == "C" || symbol == "complex") return Ring::Complex;
  if (symbol == "H" || symbol == "quaternion") return Ring::Quaternion;
  throw std::invalid_argument("unknown ring '" + std::string(symbol) + "' (expected R, C or H)");
}

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
  return m;
}

RingMatrix RingMatrix::outer(const RingVector& v) {
  RingMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j].conj();
  return m;
}

RingMatrix RingMatrix::from_columns(const std::vector<RingVector>& cols, std::size_t rows) {
  RingMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

RingVector RingMatrix::column(std::size_t c) const {
  RingVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RingMatrix RingMatrix::adjoint() const {
  RingMatrix a(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) a(c, r) = (*this)(r, c).conj();
  return a;
}

RingMatrix& RingMatrix::operator+=(const RingMatrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw std::invalid_argument("RingMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RingMatrix& RingMatrix::operator*=(double s) {
  for (auto& q : data_) q *= s;
  return *this;
}

DenseMatrix RingMatrix::to_real(Ring ring) const {
  const std::size_t d = static_cast<std::size_t>(ring_dim(ring));
  DenseMatrix out(rows_ * d, cols_ * d);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Quaternion& q = (*this)(r, c);
      // Column k of the left-multiplication matrix is q * (basis unit k).
      for (std::size_t k = 0; k < d; ++k) {
        Quaternion unit;
        unit[static_cast<int>(k)] = 1.0;
        const Quaternion image = q * unit;
        for (std::size_t l = 0; l < d; ++l) out(r * d + l, c * d + k) = image[static_cast<int>(l)];
      }
    }
  return out;
}

double RingMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& q : data_)
    for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(q[k]));
  return m;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RingMatrix: shape mismatch in *");
  RingMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Quaternion& aik = a(i, k);
      if (aik.norm2() == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix c = b;
  c *= -1.0;
  return c += a;
}

RingVector operator*(const RingMatrix& a, const RingVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("RingMatrix: shape mismatch in matvec");
  RingVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

Quaternion ring_inner(const RingVector& u, const RingVector& v) {
  Quaternion s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i].conj() * v[i];
  return s;
}

double ring_norm(const RingVector& v) {
  double s = 0.0;
  for (const auto& q : v) s += q.norm2();
  return std::sqrt(s);
}

RingVector right_scale(const RingVector& v, const Quaternion& q) {
  RingVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * q;
  return out;
}

RingVector ring_vector_from_real(std::span<const double> x, Ring ring) {
  const std::size_t d = static_cast<std::size_t>(ring_dim(ring));
  RingVector v(x.size() / d);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) v[i][static_cast<int>(k)] = x[i * d + k];
  return v;
}

Vector ring_vector_to_real(const RingVector& v, Ring ring) {
  const std::size_t d = static_cast<std::size_t>(ring_dim(ring));
  Vector x(v.size() * d);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) x[i * d + k] = v[i][static_cast<int>(k)];
  return x;
}

std::vector<RingVector> ring_gram_schmidt(std::vector<RingVector> candidates, double min_residual) {
  std::vector<RingVector> basis;
  while (!candidates.empty()) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const double n = ring_norm(candidates[i]);
      if (n > best_norm) {
        best_norm = n;
        best = i;
      }
    }
    if (best_norm < min_residual) break;
    RingVector u = right_scale(candidates[best], Quaternion(1.0 / best_norm));
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
    // Re-orthogonalize once for accuracy, then deflate the remaining candidates.
    for (const auto& b : basis) {
      const Quaternion c = ring_inner(b, u);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= b[i] * c;
    }
    const double un = ring_norm(u);
    for (auto& q : u) q *= 1.0 / un;
    for (auto& cand : candidates) {
      const Quaternion c = ring_inner(u, cand);
      for (std::size_t i = 0; i < cand.size(); ++i) cand[i] -= u[i] * c;
    }
    basis.push_back(std::move(u));
  }
  return basis;
}

}  // namespace jordan
