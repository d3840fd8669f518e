#include "k3lat/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "k3lat/errors.hpp"

namespace k3lat {

LatticeProfile lattice_profile(const IntMatrix& gram) {
  if (!is_symmetric(gram)) raise(ErrorKind::ShapeError, "Gram matrix must be square and symmetric");
  LatticeProfile out;
  out.discriminant = determinant(gram);
  if (out.discriminant == 0) raise(ErrorKind::DegenerateLattice, "Gram matrix is singular");
  out.even = true;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) out.even = false;

  // Congruence diagonalization over the rationals.
  const std::size_t n = gram.rows();
  RationalMatrix a = to_rational(gram);
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // All remaining diagonal entries vanish: replace e_i by e_i + e_j for some a_ij != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) raise(ErrorKind::DegenerateLattice, "Gram matrix is singular");
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    const Rational pivot = a(p, p);
    if (pivot > 0) ++out.signature.positive;
    else ++out.signature.negative;
    done[p] = true;
    for (std::size_t l = 0; l < n; ++l) {
      if (done[l] || a(l, p) == 0) continue;
      const Rational f = a(l, p) / pivot;
      for (std::size_t c = 0; c < n; ++c) a(l, c) -= f * a(p, c);
      for (std::size_t r = 0; r < n; ++r) a(r, l) -= f * a(r, p);
    }
  }
  return out;
}

GramLattice::GramLattice(IntMatrix gram, std::vector<std::string> labels, LatticeProfile profile)
    : gram_(std::move(gram)), labels_(std::move(labels)), profile_(std::move(profile)) {}

LatticePtr GramLattice::make(IntMatrix gram, std::vector<std::string> labels) {
  if (gram.rows() == 0) raise(ErrorKind::ShapeError, "lattice of rank 0");
  LatticeProfile profile = lattice_profile(gram);
  if (!profile.even) raise(ErrorKind::OddLattice, "Gram matrix has an odd diagonal entry");
  if (labels.empty())
    for (std::size_t i = 0; i < gram.rows(); ++i) labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != gram.rows()) raise(ErrorKind::ShapeError, "label count differs from rank");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) raise(ErrorKind::ShapeError, "basis labels must be distinct");
  return LatticePtr(new GramLattice(std::move(gram), std::move(labels), std::move(profile)));
}

std::optional<std::size_t> GramLattice::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool GramLattice::same_as(const GramLattice& other) const { return this == &other || gram_ == other.gram_; }

DivisorClass::DivisorClass(LatticePtr lattice, std::vector<Integer> coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) raise(ErrorKind::ShapeError, "class without lattice");
  if (coords_.size() != lattice_->rank()) raise(ErrorKind::ShapeError, "coordinate count differs from rank");
}

DivisorClass DivisorClass::zero(LatticePtr lattice) {
  const std::size_t n = lattice->rank();
  return DivisorClass(std::move(lattice), std::vector<Integer>(n));
}

DivisorClass DivisorClass::basis(LatticePtr lattice, std::size_t index) {
  if (index >= lattice->rank()) raise(ErrorKind::ShapeError, "basis index out of range");
  std::vector<Integer> coords(lattice->rank());
  coords[index] = 1;
  return DivisorClass(std::move(lattice), std::move(coords));
}

DivisorClass DivisorClass::basis(LatticePtr lattice, std::string_view label) {
  auto idx = lattice->index_of(label);
  if (!idx) raise(ErrorKind::ShapeError, "unknown basis label '" + std::string(label) + "'");
  return basis(std::move(lattice), *idx);
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

Integer DivisorClass::content() const {
  Integer g = 0;
  for (const auto& x : coords_) g = gcd(g, x);
  return g;
}

Integer DivisorClass::square() const { return pairing(*this, *this); }

DivisorClass DivisorClass::operator-() const {
  DivisorClass out = *this;
  for (auto& x : out.coords_) x = -x;
  return out;
}

static void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (!a.lattice() || !b.lattice() || !a.lattice()->same_as(*b.lattice()))
    raise(ErrorKind::LatticeMismatch, "classes live on different lattices");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

DivisorClass operator*(const Integer& k, const DivisorClass& d) {
  DivisorClass out = d;
  for (auto& x : out.coords_) x *= k;
  return out;
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  require_same(*this, other);
  return coords_ == other.coords_;
}

bool DivisorClass::operator<(const DivisorClass& other) const {
  require_same(*this, other);
  return coords_ < other.coords_;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Integer& c = coords_[i];
    if (c == 0) continue;
    if (c < 0) os << "-";
    else if (!first) os << "+";
    const Integer mag = abs(c);
    if (mag != 1) os << mag;
    os << lattice_->labels()[i];
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) { return os << d.to_string(); }

Integer pairing(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  const auto& g = a.lattice()->gram();
  Integer total = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < b.rank(); ++j)
      if (b[j] != 0) row += g(i, j) * b[j];
    total += a[i] * row;
  }
  return total;
}

EmbeddingReport verify_embedding(const GramLattice& src, const GramLattice& dst, const IntMatrix& map) {
  if (map.rows() != dst.rank() || map.cols() != src.rank())
    raise(ErrorKind::ShapeError, "embedding matrix must have dst.rank rows and src.rank columns");
  EmbeddingReport out;
  IntMatrix pulled = multiply(multiply(map.transpose(), dst.gram()), map);
  out.is_isometric = pulled == src.gram();
  out.invariant_factors = smith_invariants(map);
  out.is_primitive = std::all_of(out.invariant_factors.begin(), out.invariant_factors.end(),
                                 [](const Integer& x) { return x == 1; });
  return out;
}

RationalMatrix transformed_gram(const GramLattice& l1, const RationalMatrix& map) {
  if (map.rows() != l1.rank()) raise(ErrorKind::ShapeError, "basis change matrix must have l1.rank rows");
  return multiply(multiply(map.transpose(), to_rational(l1.gram())), map);
}

bool change_basis_isometry(const GramLattice& l1, const GramLattice& l2, const RationalMatrix& map) {
  if (map.rows() != l1.rank() || map.cols() != l2.rank())
    raise(ErrorKind::ShapeError, "basis change matrix must have l1.rank rows and l2.rank columns");
  RationalMatrix g = transformed_gram(l1, map);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (!is_integral(g(r, c))) return false;
      if (boost::multiprecision::numerator(g(r, c)) != l2.entry(r, c)) return false;
    }
  return true;
}

DivisorClass apply_map(const IntMatrix& map, const LatticePtr& dst, const DivisorClass& d) {
  if (map.cols() != d.rank() || map.rows() != dst->rank()) raise(ErrorKind::ShapeError, "map shape mismatch");
  std::vector<Integer> out(dst->rank());
  for (std::size_t r = 0; r < map.rows(); ++r)
    for (std::size_t c = 0; c < map.cols(); ++c) out[r] += map(r, c) * d[c];
  return DivisorClass(dst, std::move(out));
}

DivisorClass reflect(const DivisorClass& d, const DivisorClass& root) {
  if (root.square() != -2) raise(ErrorKind::NotARoot, "reflection requires a class of square -2");
  return d + pairing(d, root) * root;
}

}  // namespace k3lat
