#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

struct Component {
  std::string label;
  Integer genus;  // geometric genus of the (smooth) component
  DivisorClass cls;
};

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  Integer multiplicity;  // number of nodes joining the two components
};

// A nodal curve described by its components and a multiset of unordered edges.
class CurveConfiguration {
 public:
  // Throws ShapeError for duplicate labels, self-edges, non-positive multiplicities, negative
  // genera, unknown endpoints or classes on different lattices. Parallel edges are merged.
  static CurveConfiguration make(std::vector<Component> components, std::vector<Edge> edges);

  const std::vector<Component>& components() const { return components_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t index_of(const std::string& label) const;  // throws ShapeError
  Integer multiplicity(std::size_t a, std::size_t b) const;

 private:
  std::vector<Component> components_;
  std::vector<Edge> edges_;
};

// sum genus + sum multiplicities - #components + 1. Throws Disconnected.
Integer arithmetic_genus(const CurveConfiguration& c);

struct Piece {
  std::vector<std::string> labels;
  Integer genus;
};
// Arithmetic genus of each connected piece.
std::vector<Piece> arithmetic_genus_per_piece(const CurveConfiguration& c);

DivisorClass total_class(const CurveConfiguration& c);

// Pairs of distinct classes glued more often than their intersection number allows. Components
// sharing one class are exempt: copies of a nodal curve are glued along the image's own nodes.
std::vector<std::string> transversality_violations(const CurveConfiguration& c);

enum class PartConnectivity { Any, Connected };

struct ObstructionResult {
  bool holds = false;                  // no splitting into two multiples of H
  std::vector<std::string> violating;  // labels of one offending part, when !holds
  std::uint64_t subsets_checked = 0;
};

// Checks every split of the components into two non-empty parts whose classes are positive
// multiples of H. With PartConnectivity::Connected only splits into two connected parts count.
// Throws ClassMismatch when the total class is not k H, TooLarge beyond 24 components.
ObstructionResult decomposition_obstruction(const CurveConfiguration& c, const DivisorClass& h, const Integer& k,
                                            PartConnectivity connectivity = PartConnectivity::Any);

enum class TheoremKind { PrimR0, PrimGeneral, NonPrim };

const char* to_string(TheoremKind kind);

struct EdgeSpec {
  std::string a;
  std::string b;
  Integer multiplicity;
};

enum class R0EdgeRule {
  AsWritten,  // R(i,j)-R(k,l) iff (i=k, l=j+1) or (k=i+1, l!=j) or ((i,j),(k,l)) = ((1,1),(m,2))
  Chain,      // the closed chain R(1,1)-R(1,2)-R(2,1)-...-R(m,2)-R(1,1)
};

std::vector<EdgeSpec> prim_r0_edges(int m, R0EdgeRule rule);
// D-R1 three times and, when eps = 1, D-R2 three times.
std::vector<EdgeSpec> prim_general_edges(int eps);
// B-G1 once, G1-R1 twice, then a simple chain through the remaining G/R pairs; fibre copies
// close into a cycle hanging off B when l is even, or form a chain meeting B three times when l is odd.
std::vector<EdgeSpec> nonprim_edges(int k, int l);

struct TheoremConfig {
  TheoremKind kind = TheoremKind::PrimR0;
  int g = 0;
  int k = 1;
  int m = 0;    // residue quotient
  int r = 0;    // residue
  int eps = 0;  // PrimGeneral only
  int a = 0;    // NonPrim: index of the rank-3 lattice
  int l = 0;    // NonPrim: number of fibre copies
  int m_prime = 0;
  LatticePtr lattice;
  DivisorClass polarization;  // H with H^2 = 2g - 2
  CurveConfiguration config;
  Integer expected_genus;  // threshold the configuration is meant to realise
  std::string note;
};

// Component layout over the lattice used by each construction; edges come from the caller.
// Throws RangeError outside PrimR0: g >= 17 with g = 11 mod 6; PrimGeneral: g >= 12;
// NonPrim: g >= 8, k >= 2.
TheoremConfig build_theorem_config(TheoremKind kind, int g, int k, const std::vector<EdgeSpec>& edges);
// Same with the default edge data for the kind.
TheoremConfig build_theorem_config(TheoremKind kind, int g, int k = 1);

}  // namespace k3lat
