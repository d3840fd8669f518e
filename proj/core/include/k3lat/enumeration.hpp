#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "k3lat/detail/small.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// Exact description of the region that provably contains every solution of a query.
// With h = G.ref and N = ref^2, the form Q = 2 h h^T - N G is positive definite on a lattice of
// signature (1, n-1). A class v with v^2 >= square_min and |v.ref| <= max|degree| satisfies
// Q(v) <= level, hence |v_i| <= box[i] = isqrt(level * adj(Q)_ii / det Q).
struct CompletenessBound {
  Integer reference_square;
  Integer square_min;
  Integer square_max;
  Integer degree_min;
  Integer degree_max;
  Integer level;
  IntMatrix form;
  Integer form_determinant;
  std::vector<Integer> box;
};

struct EnumQuery {
  DivisorClass reference;  // any class of positive square
  Integer square;          // even
  Integer degree_min;
  Integer degree_max;
};

struct EnumResult {
  std::vector<DivisorClass> classes;  // deduplicated, lexicographic
  CompletenessBound bound;
  std::uint64_t nodes_visited = 0;
};

// All v with v^2 = square and degree_min <= v.ref <= degree_max.
// Throws SignatureError unless the lattice is hyperbolic (signature (1, n-1)), NotPositiveClass
// unless ref^2 > 0.
EnumResult enumerate_by_square_and_degree(const EnumQuery& query);

// Same region, with a window of squares [square_min, square_max].
EnumResult enumerate_window(const DivisorClass& reference, const Integer& square_min, const Integer& square_max,
                            const Integer& degree_min, const Integer& degree_max);

// Roots (square -2) orthogonal to d, both signs, lexicographic. Requires d^2 > 0.
std::vector<DivisorClass> roots_orthogonal_to(const DivisorClass& d);

CompletenessBound completeness_bound(const DivisorClass& reference, const Integer& square_min,
                                     const Integer& square_max, const Integer& degree_min,
                                     const Integer& degree_max);

namespace detail {

// Reusable slice enumerator for a fixed hyperbolic lattice and reference class.
class SliceEnumerator {
 public:
  SliceEnumerator(const LatticePtr& lattice, const IVec& reference);

  const SmallGram& gram() const { return gram_; }
  const IVec& reference() const { return reference_; }
  std::int64_t reference_square() const { return reference_square_; }
  // Degree functional: degree(v) = dot(functional, v).
  const IVec& functional() const { return functional_; }
  std::int64_t degree(const IVec& v) const { return dot(functional_, v); }

  // Every v with v.ref = k and square_min <= v^2 <= square_max, appended in lexicographic order.
  // Returns the number of search nodes visited.
  std::uint64_t slice(std::int64_t k, std::int64_t square_min, std::int64_t square_max,
                      std::vector<IVec>& out) const;

 private:
  SmallGram gram_;
  IVec reference_;
  std::int64_t reference_square_ = 0;
  IVec functional_;
  std::int64_t content_ = 0;        // gcd of the functional
  IVec lift_;                       // functional . lift_ = content_
  std::vector<IVec> complement_;    // basis of the orthogonal complement of ref
  std::vector<double> chol_;        // LDL^T data of the positive form on the complement
  std::vector<double> diag_;
  std::vector<std::int64_t> a_;     // integer positive form -G on the complement
  IVec lift_pairings_;              // complement_j . lift_
};

}  // namespace detail

}  // namespace k3lat
