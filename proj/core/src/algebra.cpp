#include "jordan/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jordan/errors.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

struct Algebra::Node {
  AlgebraKind kind;
  Ring ring = Ring::Real;
  int size = 0;
  std::vector<Algebra> parts;
  std::size_t real_dim = 0;
  int capacity = 0;
};

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

std::size_t matrix_real_dim(Ring ring, int m) {
  const auto mm = static_cast<std::size_t>(m);
  return mm + static_cast<std::size_t>(ring_dim(ring)) * mm * (mm - 1) / 2;
}

// Index of the pair (i, j), i < j, in row-major order of the strict upper triangle.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t m) {
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

Algebra Algebra::matrix(Ring ring, int m) {
  if (m < 1) throw PreconditionError("matrix algebra needs m >= 1");
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::Matrix;
  node->ring = ring;
  node->size = m;
  node->real_dim = matrix_real_dim(ring, m);
  node->capacity = m;
  return Algebra(std::move(node));
}

Algebra Algebra::spin(int n) {
  if (n < 2) throw PreconditionError("spin factor needs n >= 2");
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::Spin;
  node->size = n;
  node->real_dim = static_cast<std::size_t>(n) + 1;
  node->capacity = 2;
  return Algebra(std::move(node));
}

Algebra Algebra::sum(const std::vector<Algebra>& parts) {
  if (parts.empty()) throw PreconditionError("direct sum needs at least one part");
  auto node = std::make_shared<Node>();
  node->kind = AlgebraKind::Sum;
  for (const auto& p : parts) {
    if (p.kind() == AlgebraKind::Sum) {
      node->parts.insert(node->parts.end(), p.parts().begin(), p.parts().end());
    } else {
      node->parts.push_back(p);
    }
  }
  for (const auto& p : node->parts) {
    node->real_dim += p.real_dim();
    node->capacity += p.capacity();
  }
  return Algebra(std::move(node));
}

Algebra direct_sum(const std::vector<Algebra>& parts) { return Algebra::sum(parts); }

AlgebraKind Algebra::kind() const { return node_->kind; }

Ring Algebra::ring() const {
  if (node_->kind != AlgebraKind::Matrix) throw PreconditionError("ring() on a non-matrix algebra");
  return node_->ring;
}

int Algebra::size() const { return node_->size; }
const std::vector<Algebra>& Algebra::parts() const { return node_->parts; }
std::size_t Algebra::real_dim() const { return node_->real_dim; }
int Algebra::capacity() const { return node_->capacity; }

std::vector<Algebra::Block> Algebra::blocks() const {
  if (kind() != AlgebraKind::Sum) return {Block{*this, 0}};
  std::vector<Block> out;
  std::size_t offset = 0;
  for (const auto& p : parts()) {
    out.push_back(Block{p, offset});
    offset += p.real_dim();
  }
  return out;
}

std::string Algebra::name() const {
  std::ostringstream os;
  switch (kind()) {
    case AlgebraKind::Matrix: os << "H_" << size() << '(' << ring_symbol(ring()) << ')'; break;
    case AlgebraKind::Spin: os << "spin(" << size() << ')'; break;
    case AlgebraKind::Sum:
      for (std::size_t i = 0; i < parts().size(); ++i) os << (i ? " + " : "") << parts()[i].name();
      break;
  }
  return os.str();
}

std::vector<std::string> Algebra::basis_labels() const {
  std::vector<std::string> labels;
  switch (kind()) {
    case AlgebraKind::Matrix: {
      const int m = size();
      const int d = ring_dim(ring());
      static const char* comp[] = {"re", "i", "j", "k"};
      for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i) + std::to_string(i));
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          for (int k = 0; k < d; ++k)
            labels.push_back(std::string(comp[k]) + " a" + std::to_string(i) + std::to_string(j));
      break;
    }
    case AlgebraKind::Spin:
      labels.push_back("unit");
      for (int i = 1; i <= size(); ++i) labels.push_back("v" + std::to_string(i));
      break;
    case AlgebraKind::Sum: {
      for (std::size_t b = 0; b < parts().size(); ++b)
        for (const auto& l : parts()[b].basis_labels()) labels.push_back("b" + std::to_string(b) + ":" + l);
      break;
    }
  }
  return labels;
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case AlgebraKind::Matrix: return a.ring() == b.ring() && a.size() == b.size();
    case AlgebraKind::Spin: return a.size() == b.size();
    case AlgebraKind::Sum: return a.parts() == b.parts();
  }
  return false;
}

// ---------------------------------------------------------------- Element

Element::Element(Algebra algebra, Vector coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.real_dim()) {
    std::ostringstream os;
    os << "element of " << algebra_.name() << " needs " << algebra_.real_dim() << " coordinates, got "
       << coords_.size();
    throw PreconditionError(os.str());
  }
}

Element Element::zero(const Algebra& algebra) { return Element(algebra, Vector(algebra.real_dim(), 0.0)); }

Element Element::block(std::size_t index) const {
  const auto blocks = algebra_.blocks();
  const auto& b = blocks.at(index);
  Vector c(coords_.begin() + static_cast<std::ptrdiff_t>(b.offset),
           coords_.begin() + static_cast<std::ptrdiff_t>(b.offset + b.algebra.real_dim()));
  return Element(b.algebra, std::move(c));
}

namespace {
void require_same(const Algebra& a, const Algebra& b) {
  if (!(a == b)) throw AlgebraMismatchError("elements belong to different algebras: " + a.name() + " vs " + b.name());
}
}  // namespace

Element& Element::operator+=(const Element& o) {
  require_same(algebra_, o.algebra_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(algebra_, o.algebra_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Element& Element::operator*=(double s) {
  for (auto& x : coords_) x *= s;
  return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(const Element& a) { return a * -1.0; }
Element operator*(Element a, double s) { return a *= s; }
Element operator*(double s, Element a) { return a *= s; }

double max_abs_diff(const Element& a, const Element& b) {
  require_same(a.algebra(), b.algebra());
  double m = 0.0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool approx_equal(const Element& a, const Element& b, double tol) {
  const double scale = std::max({1.0, max_abs(a.coords()), max_abs(b.coords())});
  return max_abs_diff(a, b) <= tol * scale;
}

Element embed_block(const Algebra& algebra, std::size_t index, const Element& part) {
  const auto blocks = algebra.blocks();
  const auto& b = blocks.at(index);
  require_same(b.algebra, part.algebra());
  Vector c(algebra.real_dim(), 0.0);
  std::copy(part.coords().begin(), part.coords().end(), c.begin() + static_cast<std::ptrdiff_t>(b.offset));
  return Element(algebra, std::move(c));
}

// ---------------------------------------------------------- matrix algebras

RingMatrix to_ring_matrix(const Element& a) {
  const Algebra& alg = a.algebra();
  if (alg.kind() != AlgebraKind::Matrix) throw PreconditionError("to_ring_matrix: not a matrix algebra");
  const auto m = static_cast<std::size_t>(alg.size());
  const int d = ring_dim(alg.ring());
  RingMatrix h(m, m);
  for (std::size_t i = 0; i < m; ++i) h(i, i) = Quaternion(a[i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::size_t base = m + static_cast<std::size_t>(d) * pair_index(i, j, m);
      Quaternion q;
      for (int k = 0; k < d; ++k) q[k] = a[base + static_cast<std::size_t>(k)] / kSqrt2;
      h(i, j) = q;
      h(j, i) = q.conj();
    }
  return h;
}

Element from_ring_matrix(const Algebra& alg, const RingMatrix& h) {
  if (alg.kind() != AlgebraKind::Matrix) throw PreconditionError("from_ring_matrix: not a matrix algebra");
  const auto m = static_cast<std::size_t>(alg.size());
  if (h.rows() != m || h.cols() != m) throw PreconditionError("from_ring_matrix: size mismatch");
  const int d = ring_dim(alg.ring());
  Vector c(alg.real_dim(), 0.0);
  for (std::size_t i = 0; i < m; ++i) c[i] = h(i, i).w;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Quaternion q = (h(i, j) + h(j, i).conj()) * 0.5;
      const std::size_t base = m + static_cast<std::size_t>(d) * pair_index(i, j, m);
      for (int k = 0; k < d; ++k) c[base + static_cast<std::size_t>(k)] = kSqrt2 * q[k];
    }
  return Element(alg, std::move(c));
}

Element spin_element(const Algebra& alg, double s, std::span<const double> v) {
  if (alg.kind() != AlgebraKind::Spin) throw PreconditionError("spin_element: not a spin factor");
  if (v.size() != static_cast<std::size_t>(alg.size())) throw PreconditionError("spin_element: vector length mismatch");
  Vector c(alg.real_dim());
  c[0] = s;
  std::copy(v.begin(), v.end(), c.begin() + 1);
  return Element(alg, std::move(c));
}

// ---------------------------------------------------------- unit and product

namespace {

Vector leaf_unit(const Algebra& alg) {
  Vector c(alg.real_dim(), 0.0);
  if (alg.kind() == AlgebraKind::Matrix) {
    for (int i = 0; i < alg.size(); ++i) c[static_cast<std::size_t>(i)] = 1.0;
  } else {
    c[0] = 1.0;
  }
  return c;
}

Vector leaf_product(const Element& a, const Element& b) {
  const Algebra& alg = a.algebra();
  if (alg.kind() == AlgebraKind::Matrix) {
    const RingMatrix x = to_ring_matrix(a);
    const RingMatrix y = to_ring_matrix(b);
    RingMatrix p = x * y + y * x;
    p *= 0.5;
    return from_ring_matrix(alg, p).coords();
  }
  // (s, v)(t, w) = (st + v.w, s w + t v)
  const auto& x = a.coords();
  const auto& y = b.coords();
  Vector c(x.size());
  c[0] = x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    c[0] += x[i] * y[i];
    c[i] = x[0] * y[i] + y[0] * x[i];
  }
  return c;
}

}  // namespace

Element unit(const Algebra& alg) {
  Vector c(alg.real_dim(), 0.0);
  for (const auto& b : alg.blocks()) {
    const Vector u = leaf_unit(b.algebra);
    std::copy(u.begin(), u.end(), c.begin() + static_cast<std::ptrdiff_t>(b.offset));
  }
  return Element(alg, std::move(c));
}

Element jordan_product(const Element& a, const Element& b) {
  require_same(a.algebra(), b.algebra());
  const Algebra& alg = a.algebra();
  if (alg.kind() != AlgebraKind::Sum) return Element(alg, leaf_product(a, b));
  Vector c(alg.real_dim(), 0.0);
  const auto blocks = alg.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Vector p = leaf_product(a.block(i), b.block(i));
    std::copy(p.begin(), p.end(), c.begin() + static_cast<std::ptrdiff_t>(blocks[i].offset));
  }
  return Element(alg, std::move(c));
}

// ---------------------------------------------------------- spectral theory

std::vector<RingEigenspace> matrix_eigenspaces(const Element& a, const Tolerances& tol) {
  const Algebra& alg = a.algebra();
  if (alg.kind() != AlgebraKind::Matrix) throw PreconditionError("matrix_eigenspaces: not a matrix algebra");
  const Ring ring = alg.ring();
  const auto d = static_cast<std::size_t>(ring_dim(ring));
  const EigenSystem es = sym_eigen(to_ring_matrix(a).to_real(ring), tol.symmetry);
  const std::size_t n = es.values.size();

  double scale = 1.0;
  for (double v : es.values) scale = std::max(scale, std::abs(v));
  const double gap = tol.eigen_cluster * scale;

  std::vector<RingEigenspace> spaces;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && es.values[end] - es.values[end - 1] <= gap) ++end;
    double mean = 0.0;
    std::vector<RingVector> candidates;
    for (std::size_t k = start; k < end; ++k) {
      mean += es.values[k];
      candidates.push_back(ring_vector_from_real(es.vectors.column(k), ring));
    }
    mean /= static_cast<double>(end - start);
    auto vectors = ring_gram_schmidt(std::move(candidates), 0.1);
    if (vectors.size() * d != end - start)
      throw Error("matrix_eigenspaces: eigenspace dimension is not a multiple of the ring dimension");
    spaces.push_back(RingEigenspace{mean, std::move(vectors)});
    start = end;
  }
  return spaces;
}

namespace {

std::vector<Eigenspace> leaf_spectral(const Element& a, const Tolerances& tol) {
  const Algebra& alg = a.algebra();
  std::vector<Eigenspace> spaces;
  if (alg.kind() == AlgebraKind::Matrix) {
    for (auto& rs : matrix_eigenspaces(a, tol)) {
      Eigenspace sp{rs.value, {}};
      for (const auto& v : rs.vectors) sp.atoms.push_back(from_ring_matrix(alg, RingMatrix::outer(v)));
      spaces.push_back(std::move(sp));
    }
    return spaces;
  }
  const auto& c = a.coords();
  const double s = c[0];
  const std::span<const double> v(c.data() + 1, c.size() - 1);
  const double r = norm(v);
  Vector dir(v.size(), 0.0);
  const double scale = std::max(1.0, std::abs(s) + r);
  const bool degenerate = r <= tol.eigen_cluster * scale;
  if (degenerate) {
    dir[0] = 1.0;
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) dir[i] = v[i] / r;
  }
  Vector minus(c.size()), plus(c.size());
  minus[0] = plus[0] = 0.5;
  for (std::size_t i = 0; i < dir.size(); ++i) {
    minus[i + 1] = -0.5 * dir[i];
    plus[i + 1] = 0.5 * dir[i];
  }
  Element e_minus(alg, std::move(minus));
  Element e_plus(alg, std::move(plus));
  if (degenerate) {
    spaces.push_back(Eigenspace{s, {std::move(e_plus), std::move(e_minus)}});
  } else {
    spaces.push_back(Eigenspace{s - r, {std::move(e_minus)}});
    spaces.push_back(Eigenspace{s + r, {std::move(e_plus)}});
  }
  return spaces;
}

}  // namespace

SpectralDecomposition spectral_decompose(const Element& a, const Tolerances& tol) {
  const Algebra& alg = a.algebra();
  if (alg.kind() != AlgebraKind::Sum) return SpectralDecomposition{alg, leaf_spectral(a, tol)};

  struct Term {
    double value;
    Element atom;
  };
  std::vector<Term> terms;
  const auto blocks = alg.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (auto& sp : leaf_spectral(a.block(i), tol))
      for (auto& atom : sp.atoms) terms.push_back(Term{sp.value, embed_block(alg, i, atom)});
  std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.value < y.value; });

  double scale = 1.0;
  for (const auto& t : terms) scale = std::max(scale, std::abs(t.value));
  const double gap = tol.eigen_cluster * scale;

  SpectralDecomposition out{alg, {}};
  std::size_t start = 0;
  while (start < terms.size()) {
    std::size_t end = start + 1;
    while (end < terms.size() && terms[end].value - terms[end - 1].value <= gap) ++end;
    Eigenspace sp{0.0, {}};
    for (std::size_t k = start; k < end; ++k) {
      sp.value += terms[k].value;
      sp.atoms.push_back(std::move(terms[k].atom));
    }
    sp.value /= static_cast<double>(end - start);
    out.spaces.push_back(std::move(sp));
    start = end;
  }
  return out;
}

std::size_t SpectralDecomposition::atom_count() const {
  std::size_t n = 0;
  for (const auto& s : spaces) n += s.atoms.size();
  return n;
}

Element SpectralDecomposition::reconstruct() const {
  Element r = Element::zero(algebra);
  for (const auto& s : spaces)
    for (const auto& e : s.atoms) r += s.value * e;
  return r;
}

Element SpectralDecomposition::atom_sum() const {
  Element r = Element::zero(algebra);
  for (const auto& s : spaces)
    for (const auto& e : s.atoms) r += e;
  return r;
}

double SpectralDecomposition::min_value() const { return spaces.front().value; }
double SpectralDecomposition::max_value() const { return spaces.back().value; }

Vector spectral_values(const Element& a, const Tolerances& tol) {
  Vector values;
  const Algebra& alg = a.algebra();
  const auto blocks = alg.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Element part = alg.kind() == AlgebraKind::Sum ? a.block(i) : a;
    const Algebra& leaf = part.algebra();
    if (leaf.kind() == AlgebraKind::Matrix) {
      const auto d = static_cast<std::size_t>(ring_dim(leaf.ring()));
      const EigenSystem es = sym_eigen(to_ring_matrix(part).to_real(leaf.ring()), tol.symmetry);
      for (std::size_t k = 0; k < es.values.size(); k += d) values.push_back(es.values[k]);
    } else {
      const auto& c = part.coords();
      const double r = norm(std::span<const double>(c.data() + 1, c.size() - 1));
      values.push_back(c[0] - r);
      values.push_back(c[0] + r);
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

double order_norm(const Element& a) {
  double n = 0.0;
  for (double v : spectral_values(a)) n = std::max(n, std::abs(v));
  return n;
}

bool in_cone(const Element& a, std::optional<double> tol) {
  const Vector values = spectral_values(a);
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double t = tol.value_or(default_tolerances().cone * scale);
  return values.front() >= -t;
}

// ---------------------------------------------------------------- states

double State::operator()(const Element& a) const {
  require_same(algebra, a.algebra());
  return dot(functional, a.coords());
}

State atom_state(const Element& atom, const Tolerances& tol) {
  const Algebra& alg = atom.algebra();
  const auto blocks = alg.blocks();
  std::optional<std::size_t> home;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Element part = alg.kind() == AlgebraKind::Sum ? atom.block(i) : atom;
    if (max_abs(part.coords()) <= tol.compare) continue;
    if (home) throw PreconditionError("atom_state: element is supported on more than one block");
    home = i;
  }
  if (!home) throw PreconditionError("atom_state: zero element is not an atom");
  const Element part = alg.kind() == AlgebraKind::Sum ? atom.block(*home) : atom;
  const Vector values = spectral_values(part, tol);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double expected = k + 1 == values.size() ? 1.0 : 0.0;
    if (std::abs(values[k] - expected) > tol.projection)
      throw PreconditionError("atom_state: element is not an atom");
  }
  Vector f(alg.real_dim(), 0.0);
  const double weight = part.algebra().kind() == AlgebraKind::Spin ? 2.0 : 1.0;
  for (std::size_t k = 0; k < part.coords().size(); ++k) f[blocks[*home].offset + k] = weight * part[k];
  return State{alg, std::move(f)};
}

// ---------------------------------------------------------------- faces

Element Face::embed(const Element& b) const {
  require_same(algebra, b.algebra());
  return Element(ambient, embedding * std::span<const double>(b.coords()));
}

Element Face::compress(const Element& a) const {
  require_same(ambient, a.algebra());
  return Element(algebra, compression * std::span<const double>(a.coords()));
}

namespace {

struct LeafFace {
  Algebra algebra;
  DenseMatrix embedding;
  DenseMatrix compression;
};

void check_projection_values(double value, const Tolerances& tol) {
  if (std::abs(value) > tol.projection && std::abs(value - 1.0) > tol.projection) {
    std::ostringstream os;
    os << "not a projection: eigenvalue " << value;
    throw NotAProjectionError(os.str(), value);
  }
}

std::optional<LeafFace> leaf_face(const Element& p, const Tolerances& tol) {
  const Algebra& alg = p.algebra();
  const std::size_t n = alg.real_dim();
  if (alg.kind() == AlgebraKind::Spin) {
    const Vector values = spectral_values(p, tol);
    for (double v : values) check_projection_values(v, tol);
    int rank = 0;
    for (double v : values) rank += std::abs(v - 1.0) <= tol.projection ? 1 : 0;
    if (rank == 0) return std::nullopt;
    if (rank == 2) return LeafFace{alg, DenseMatrix::identity(n), DenseMatrix::identity(n)};
    DenseMatrix e(n, 1), c(1, n);
    for (std::size_t k = 0; k < n; ++k) {
      e(k, 0) = p[k];
      c(0, k) = 2.0 * p[k];
    }
    return LeafFace{Algebra::matrix(Ring::Real, 1), std::move(e), std::move(c)};
  }

  std::vector<RingVector> range;
  for (const auto& sp : matrix_eigenspaces(p, tol)) {
    check_projection_values(sp.value, tol);
    if (std::abs(sp.value - 1.0) <= tol.projection) range.insert(range.end(), sp.vectors.begin(), sp.vectors.end());
  }
  const std::size_t r = range.size();
  const auto m = static_cast<std::size_t>(alg.size());
  if (r == 0) return std::nullopt;
  if (r == m) return LeafFace{alg, DenseMatrix::identity(n), DenseMatrix::identity(n)};

  const Algebra face = Algebra::matrix(alg.ring(), static_cast<int>(r));
  const RingMatrix w = RingMatrix::from_columns(range, m);
  const RingMatrix w_adj = w.adjoint();
  DenseMatrix e(n, face.real_dim());
  for (std::size_t k = 0; k < face.real_dim(); ++k) {
    Vector basis(face.real_dim(), 0.0);
    basis[k] = 1.0;
    const RingMatrix b = to_ring_matrix(Element(face, std::move(basis)));
    e.set_column(k, from_ring_matrix(alg, w * b * w_adj).coords());
  }
  // The embedding is an isometry for the trace form, so its transpose is the
  // compression b -> W^* b W.
  DenseMatrix c = e.transpose();
  return LeafFace{face, std::move(e), std::move(c)};
}

}  // namespace

Face restrict_to(const Element& p, const Tolerances& tol) {
  const Algebra& alg = p.algebra();
  const auto blocks = alg.blocks();
  std::vector<LeafFace> faces;
  std::vector<std::size_t> homes;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Element part = alg.kind() == AlgebraKind::Sum ? p.block(i) : p;
    if (auto f = leaf_face(part, tol)) {
      faces.push_back(std::move(*f));
      homes.push_back(i);
    }
  }
  if (faces.empty()) throw PreconditionError("restrict: projection is zero");
  if (alg.kind() != AlgebraKind::Sum)
    return Face{faces[0].algebra, alg, std::move(faces[0].embedding), std::move(faces[0].compression)};

  std::vector<Algebra> parts;
  for (const auto& f : faces) parts.push_back(f.algebra);
  const Algebra face = parts.size() == 1 ? parts[0] : Algebra::sum(parts);
  DenseMatrix e(alg.real_dim(), face.real_dim()), c(face.real_dim(), alg.real_dim());
  std::size_t col = 0;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    const std::size_t row = blocks[homes[k]].offset;
    const auto& f = faces[k];
    for (std::size_t i = 0; i < f.embedding.rows(); ++i)
      for (std::size_t j = 0; j < f.embedding.cols(); ++j) {
        e(row + i, col + j) = f.embedding(i, j);
        c(col + j, row + i) = f.compression(j, i);
      }
    col += f.embedding.cols();
  }
  return Face{face, alg, std::move(e), std::move(c)};
}

}  // namespace jordan
