#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Pairing table on the 25 curves E_ij (i, j = 1..4), T_i, S_j, F spanning part of the Picard
// group of a Kummer surface of a product of elliptic curves. Squares are -2 except F^2 = 0;
// T_i.E_ij = S_j.E_ij = 1, F.S_j = fs; every other pairing vanishes. The table is degenerate, so
// it is kept as a pairing on formal combinations rather than as a GramLattice.
class KummerSpan {
 public:
  static constexpr std::size_t kSize = 25;

  explicit KummerSpan(int fs_pairing = 1);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(std::string_view label) const;  // throws ShapeError
  int entry(std::size_t i, std::size_t j) const { return table_[i][j]; }
  int fs_pairing() const { return fs_; }

  using Combination = std::array<Integer, kSize>;

  // Parses "S1+E11+T1" style sums of labels with optional integer coefficients.
  Combination combination(std::string_view expression) const;
  Integer pairing(const Combination& a, const Combination& b) const;

 private:
  int fs_;
  std::vector<std::string> labels_;
  std::array<std::array<int, kSize>, kSize> table_{};
};

// Curve combinations playing the roles of A, B, G1, G2, G3 for K_d.
std::array<std::string, 5> kummer_curve_expressions(int d);

struct KummerCheck {
  int d = 0;
  IntMatrix gram;         // pairings of the five combinations
  bool gram_matches = false;
  IntMatrix test_matrix;  // rows: T1, T3, E41, E24, E23 paired with the five combinations
  std::vector<Integer> test_invariants;
  bool primitive = false;  // the test matrix is unimodular
};

// Compares the combinations with build_K(d) and certifies primitivity through test vectors.
KummerCheck verify_kummer(int d, const KummerSpan& span);

}  // namespace k3lat
