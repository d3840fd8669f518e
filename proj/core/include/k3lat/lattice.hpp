#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "k3lat/integer.hpp"
#include "k3lat/matrix.hpp"

namespace k3lat {

struct Signature {
  int positive = 0;
  int negative = 0;
  bool operator==(const Signature&) const = default;
};

struct LatticeProfile {
  Signature signature;
  bool even = false;
  Integer discriminant;  // determinant of the Gram matrix
};

// Exact signature, parity and discriminant of a symmetric integer matrix.
// Throws DegenerateLattice for singular input and ShapeError for non-symmetric input.
LatticeProfile lattice_profile(const IntMatrix& gram);

class GramLattice;
using LatticePtr = std::shared_ptr<const GramLattice>;

// Immutable even nondegenerate lattice given by its Gram matrix in a fixed labelled basis.
class GramLattice {
 public:
  // Labels default to e1..en. Throws ShapeError, DegenerateLattice or OddLattice.
  static LatticePtr make(IntMatrix gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Integer& entry(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  const LatticeProfile& profile() const { return profile_; }

  bool same_as(const GramLattice& other) const;

 private:
  GramLattice(IntMatrix gram, std::vector<std::string> labels, LatticeProfile profile);

  IntMatrix gram_;
  std::vector<std::string> labels_;
  LatticeProfile profile_;
};

// Integer coordinate vector relative to the basis of a lattice.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(LatticePtr lattice, std::vector<Integer> coords);

  static DivisorClass zero(LatticePtr lattice);
  static DivisorClass basis(LatticePtr lattice, std::size_t index);
  // Throws ShapeError for unknown labels.
  static DivisorClass basis(LatticePtr lattice, std::string_view label);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::size_t rank() const { return coords_.size(); }

  bool is_zero() const;
  // Gcd of the coordinates (0 for the zero class).
  Integer content() const;
  bool is_primitive() const { return content() == 1; }
  Integer square() const;

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, const DivisorClass& d);

  // Coordinates compared exactly; lattices must agree.
  bool operator==(const DivisorClass& other) const;
  // Lexicographic order on coordinates.
  bool operator<(const DivisorClass& other) const;

  // Human-readable linear combination of basis labels, e.g. "L-2E".
  std::string to_string() const;

 private:
  LatticePtr lattice_;
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

// Throws LatticeMismatch when the classes live on different lattices.
Integer pairing(const DivisorClass& a, const DivisorClass& b);

struct EmbeddingReport {
  bool is_isometric = false;
  bool is_primitive = false;
  std::vector<Integer> invariant_factors;  // Smith invariants of the map
};

// map has dst.rank() rows and src.rank() columns; column j is the image of src basis vector j.
EmbeddingReport verify_embedding(const GramLattice& src, const GramLattice& dst, const IntMatrix& map);

// Columns of map are rational vectors in the basis of l1. Returns true iff the Gram matrix of
// l1 in the new basis is integral and equal to l2's Gram matrix.
bool change_basis_isometry(const GramLattice& l1, const GramLattice& l2, const RationalMatrix& map);

// Gram matrix of l1 in the rational basis given by the columns of map.
RationalMatrix transformed_gram(const GramLattice& l1, const RationalMatrix& map);

// Image of a class of src under an embedding matrix.
DivisorClass apply_map(const IntMatrix& map, const LatticePtr& dst, const DivisorClass& d);

// D + (D.R) R. Throws NotARoot unless R^2 = -2.
DivisorClass reflect(const DivisorClass& d, const DivisorClass& root);

}  // namespace k3lat
