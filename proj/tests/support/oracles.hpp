#pragma once

// Brute-force reference implementations used to cross-check the engine.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "k3lat/cone.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/matrix.hpp"

namespace k3lat::testing {

using Coords = std::vector<Integer>;

inline std::set<Coords> coords_of(const std::vector<DivisorClass>& classes) {
  std::set<Coords> out;
  for (const auto& c : classes) out.insert(c.coords());
  return out;
}

// Coordinate box containing every v with v^2 >= square_min and |v.h| <= max_abs_degree.
// Derived independently of the engine: Q(v) = 2 (v.h)^2 - h^2 v^2 is positive definite on a
// hyperbolic lattice and Q(v) <= 2 K^2 - h^2 square_min =: level, so v_i^2 <= level (Q^-1)_ii.
inline std::vector<Integer> oracle_box(const DivisorClass& h, const Integer& square_min, const Integer& max_abs_degree) {
  const auto& g = h.lattice()->gram();
  const std::size_t n = g.rows();
  std::vector<Integer> gh(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gh[i] += g(i, j) * h[j];
  const Integer norm = h.square();
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = 2 * gh[i] * gh[j] - norm * g(i, j);
  const Integer det = determinant(q);
  const IntMatrix adj = adjugate(q);
  Integer level = 2 * max_abs_degree * max_abs_degree - norm * square_min;
  if (level < 0) level = 0;
  std::vector<Integer> box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = isqrt(level * adj(i, i) / det) + 1;
  return box;
}

inline void for_each_in_box(const std::vector<Integer>& box, const std::function<void(const Coords&)>& fn) {
  Coords v(box.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == box.size()) {
      fn(v);
      return;
    }
    for (Integer x = -box[i]; x <= box[i]; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
}

// Every v in the box with square_min <= v^2 <= square_max and degree_min <= v.h <= degree_max.
inline std::set<Coords> brute_force_window(const DivisorClass& h, const Integer& square_min, const Integer& square_max,
                                           const Integer& degree_min, const Integer& degree_max,
                                           std::optional<std::vector<Integer>> box = std::nullopt) {
  const Integer k = std::max(abs(degree_min), abs(degree_max));
  if (!box) box = oracle_box(h, square_min, k);
  std::set<Coords> out;
  const LatticePtr& lat = h.lattice();
  for_each_in_box(*box, [&](const Coords& c) {
    const DivisorClass v(lat, c);
    const Integer d = pairing(v, h);
    if (d < degree_min || d > degree_max) return;
    const Integer s = v.square();
    if (s >= square_min && s <= square_max) out.insert(c);
  });
  return out;
}

// Effective classes by degree, built bottom-up: Eff_k is the set of degree-k classes of square
// >= -2 (effective by Riemann-Roch once H is ample) together with all sums a + b, a in Eff_i,
// b in Eff_{k-i}. Every effective class is a sum of irreducible curves of square >= -2, so the
// table is exact for degrees 1..max_degree.
class EffectivityOracle {
 public:
  EffectivityOracle(const DivisorClass& h, int max_degree) : h_(h), levels_(static_cast<std::size_t>(max_degree) + 1) {
    const Integer norm = h.square();
    for (int k = 1; k <= max_degree; ++k) {
      // Hodge index: v^2 <= (v.h)^2 / h^2 for every v.
      auto base = brute_force_window(h, -2, Integer(k) * k / norm, k, k);
      levels_[k] = base;
      for (int i = 1; i <= k / 2; ++i)
        for (const auto& a : levels_[i])
          for (const auto& b : levels_[k - i]) {
            Coords s(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
            levels_[k].insert(std::move(s));
          }
    }
  }

  // Decides effectivity for classes of degree <= max_degree.
  bool is_effective(const DivisorClass& d) const {
    if (d.is_zero()) return true;
    const Integer deg = pairing(d, h_);
    if (deg <= 0) return false;
    if (deg >= static_cast<long>(levels_.size())) throw std::out_of_range("degree beyond the oracle table");
    return levels_[static_cast<std::size_t>(deg)].count(d.coords()) > 0;
  }

  const std::set<Coords>& level(int k) const { return levels_[static_cast<std::size_t>(k)]; }

 private:
  DivisorClass h_;
  std::vector<std::set<Coords>> levels_;
};

// Random even nondegenerate lattice of signature (1,2) with entries in [-bound, bound].
inline LatticePtr random_hyperbolic_rank3(std::mt19937_64& rng, int bound = 10) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::uniform_int_distribution<int> half(-bound / 2, bound / 2);
  while (true) {
    IntMatrix g(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      g(i, i) = 2 * half(rng);
      for (std::size_t j = i + 1; j < 3; ++j) g(i, j) = g(j, i) = entry(rng);
    }
    if (determinant(g) == 0) continue;
    const LatticeProfile p = lattice_profile(g);
    if (p.signature == Signature{1, 2}) return GramLattice::make(g);
  }
}

inline DivisorClass random_class(std::mt19937_64& rng, const LatticePtr& lat, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  Coords v(lat->rank());
  for (auto& x : v) x = c(rng);
  return DivisorClass(lat, v);
}

// An ample class: a random positive class is reflected into the chamber of a seed that has no
// orthogonal root; the result is kept when it has no orthogonal root either.
inline DivisorClass find_ample(std::mt19937_64& rng, const LatticePtr& lat) {
  std::optional<DivisorClass> seed;
  while (!seed) {
    const DivisorClass s = random_class(rng, lat, 3);
    if (s.square() > 0 && roots_orthogonal_to(s).empty()) seed = s;
  }
  while (true) {
    const DivisorClass d = random_class(rng, lat, 4);
    if (d.square() <= 0) continue;
    const DivisorClass h = nef_reduce(d, *seed).result;
    if (roots_orthogonal_to(h).empty()) return h;
  }
}

}  // namespace k3lat::testing
