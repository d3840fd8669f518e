#pragma once

#include <array>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Rank-10 lattice on {L, E, G1..G8}: L^2 = 2g-2, L.E = floor((g+1)/2), E^2 = 0, Gi^2 = -2,
// L.Gi = d_i, all other pairings zero.
struct OmegaParams {
  int g = 0;
  std::array<int, 8> d{};
};

int omega_half(int g);  // floor((g+1)/2) = L.E

// Throws RangeError unless g >= 5 and 1 <= d_i < floor((g+1)/2).
void validate(const OmegaParams& params);
LatticePtr build_omega(const OmegaParams& params);

// {s, f, r1..rn}: s^2 = -2, s.f = 1, f^2 = 0, ri^2 = -2 (section and fibre of an elliptic fibration).
LatticePtr build_section_fibre_lattice(int roots);
// {e, f, r1..rn}: the hyperbolic plane in its standard form plus n orthogonal roots.
LatticePtr build_hyperbolic_plus_roots(int roots);

// Columns: L - gF, F, Gi - d_i F with F = E / (L.E), in the basis of build_omega(params).
RationalMatrix omega_section_fibre_basis(const OmegaParams& params);
// Columns: L - (g-1)F, F, Gi - d_i F.
RationalMatrix omega_hyperbolic_basis(const OmegaParams& params);
// Columns: e = s + f, f, ri; maps the section-fibre form to the standard hyperbolic form.
IntMatrix section_fibre_to_hyperbolic(int roots);

// Rank-3 lattice on {M, R1, R2}: [[2h-2, s1, 3], [s1, -2, 0], [3, 0, -2]].
struct PData {
  int p = 0;
  int h = 0;
  int half = 0;  // floor((h+1)/2)
  int l = 0;     // p - h = half * l + m
  int m = 0;
  int s1 = 0;
};
// Throws RangeError unless p > h >= 8.
PData p_data(int p, int h);
LatticePtr build_P(int p, int h);

struct PEmbedding {
  PData data;
  OmegaParams omega;  // d1 from the residue rule, d2 = 3, remaining entries 1
  IntMatrix map;      // 10 x 3, columns: images of M, R1, R2
};
PEmbedding p_embedding(int p, int h);

// Rank-3 lattice on {D, F, G}: [[2a-2, 6, 1], [6, 0, 0], [1, 0, -2]].
LatticePtr build_Lambda(int a);

struct LambdaSolution {
  int d1 = 0;
  int d2 = 0;
  int eps = 0;
  OmegaParams omega;  // g = 11, d8 = 1, d1/d2 as chosen, remaining entries 1
  IntMatrix map;      // 10 x 3: D -> L + G1 + eps G2, F -> E, G -> G8
};
// Every (d1, d2, eps) with 3 <= d1, d2 <= 5, eps in {0, 1} and (L + G1 + eps G2)^2 = 2a - 2.
std::vector<LambdaSolution> lambda_solutions(int a);

// Rank-3 lattice on {X, Y, Z}: [[2y-2, 6, 3], [6, 0, 0], [3, 0, -2]] with y = a - 14.
LatticePtr build_Lambda_bar(int a);
// Columns X = D - 2F - G, Y = F, Z = G in the basis of build_Lambda(a).
IntMatrix lambda_to_lambda_bar();

// Rank-5 lattice on {A, B, G1, G2, G3}.
// Throws RangeError unless 1 <= d <= 5.
LatticePtr build_K(int d);

struct KEmbedding {
  int d = 0;
  int eps1 = 0;
  int eps2 = 0;
  IntMatrix map;  // 5 x 3: X -> A + eps1 G3 + eps2 G2, Y -> B, Z -> G1
};
// All admissible targets K_d for 14 <= a <= 19 (every d for a = 14).
std::vector<KEmbedding> lambda_bar_embeddings(int a);

// Classes used as ample references by the replay and tests.
DivisorClass omega_reference(const LatticePtr& omega);  // L
DivisorClass p_reference(const LatticePtr& p);          // M
DivisorClass lambda_reference(const LatticePtr& lam);   // D
DivisorClass k_reference(const LatticePtr& k);          // an ample class with A, B, Gi effective

}  // namespace k3lat
