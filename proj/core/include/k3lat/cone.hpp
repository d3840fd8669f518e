#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3lat/enumeration.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

enum class PolarizationStatus { Ample, BigNef };

const char* to_string(PolarizationStatus status);

struct EngineOptions {
  // Largest degree window any search may open; exceeding it raises DegreeCapExceeded.
  std::optional<Integer> max_degree;
};

// A hyperbolic lattice together with a reference class H of positive square.
// Ample: no root is orthogonal to H, so every root has a definite sign and H fixes the chamber.
// BigNef: H is declared nef; only nefness questions are answered.
class PolarizedContext {
 public:
  // Throws NotPositiveClass when H^2 <= 0 and InvalidContext when an Ample status is
  // contradicted by a root orthogonal to H.
  static PolarizedContext make(const DivisorClass& h, PolarizationStatus status, EngineOptions options = {});

  const LatticePtr& lattice() const { return h_.lattice(); }
  const DivisorClass& h() const { return h_; }
  PolarizationStatus status() const { return status_; }
  const EngineOptions& options() const { return options_; }
  const detail::SliceEnumerator& enumerator() const { return *enumerator_; }

 private:
  PolarizedContext(DivisorClass h, PolarizationStatus status, EngineOptions options,
                   std::shared_ptr<const detail::SliceEnumerator> enumerator);

  DivisorClass h_;
  PolarizationStatus status_;
  EngineOptions options_;
  std::shared_ptr<const detail::SliceEnumerator> enumerator_;
};

struct Term {
  DivisorClass cls;
  Integer multiplicity;
};

// D = sum of multiplicity * class, every summand effective.
struct Decomposition {
  std::vector<Term> terms;
};

// A single class that settles the question (an offending root, an isotropic class, ...).
struct WitnessClass {
  DivisorClass cls;
  std::string role;
};

// Negative answer backed by an exhaustive search.
struct Exhausted {
  std::string search;
  Integer degree_bound;
  std::uint64_t candidates = 0;
};

struct ReflectionChain {
  std::vector<DivisorClass> roots;
  DivisorClass result;
};

struct SubCheck;

struct Composite {
  std::vector<SubCheck> checks;
};

using Certificate = std::variant<Decomposition, WitnessClass, Exhausted, ReflectionChain, Composite>;

struct Decision {
  bool verdict = false;
  Certificate certificate;
  std::string reason;

  explicit operator bool() const { return verdict; }
};

struct SubCheck {
  std::string name;
  Decision decision;
};

// Effectivity by recursive root subtraction. Requires an Ample context (NeedsAmpleContext).
Decision is_effective(const PolarizedContext& ctx, const DivisorClass& d);

// True iff D is the class of an integral curve. Throws NotEffective for ineffective D.
//  D^2 = -2: D admits no splitting A + B into non-zero effective classes.
//  D^2 >= 0: D is nef, and primitive when D^2 = 0, and has no effective isotropic F with F.D = 1
//            when D^2 > 0.
//  D^2 < -2: never.
Decision is_irreducible_class(const PolarizedContext& ctx, const DivisorClass& d);

// No effective root pairs negatively with D. Roots are searched up to the degree
// nef_root_degree_bound(D^2, D.H); BigNef contexts also test the roots orthogonal to H.
Decision is_nef(const PolarizedContext& ctx, const DivisorClass& d);
Decision is_big_nef(const PolarizedContext& ctx, const DivisorClass& d);

// Largest t >= 0 with s t^2 + 2 k t <= 2 k^2, where s = D^2 >= 0 and k = D.H > 0. Every root R
// with R.H > 0 and R.D < 0 satisfies R.H <= t: the class (D.H) R - (R.H) D is orthogonal to H,
// so its square -2 k^2 + 2 k t |R.D| + s t^2 is non-positive.
Integer nef_root_degree_bound(const Integer& square, const Integer& degree);

struct NefReduction {
  DivisorClass result;
  std::vector<DivisorClass> chain;  // roots reflected in, in order
};

// Reflects D (after fixing its sign so that D.seed > 0) in roots R with R.seed > 0 and R.D < 0
// until no such root remains. Requires D^2 >= 0, D != 0 (NotPositiveClass) and a seed of
// positive square with no orthogonal root.
NefReduction nef_reduce(const DivisorClass& d, const DivisorClass& seed, EngineOptions options = {});

// D big and nef, no effective root orthogonal to D, and no effective isotropic F with
// F.D in {1, 2}. Throws NotPrimitive for imprimitive D.
Decision very_ample_knutsen(const PolarizedContext& ctx, const DivisorClass& d);

// The seven numerical hypotheses of the quadric hull criterion for (L, M), with g = L^2/2 + 1.
// Throws ParityError when g is even.
Decision quadric_hull_hypotheses(const PolarizedContext& ctx, const DivisorClass& l, const DivisorClass& m);

struct CliffordResult {
  Integer value;
  Integer generic_value;                // floor((g-1)/2)
  std::optional<DivisorClass> witness;  // present iff value < generic_value
  std::uint64_t candidates = 0;
};

// min(floor((g-1)/2), min over effective D with D^2 >= 0, 2D^2 < D.L <= g-1 of D.L - D^2 - 2).
CliffordResult clifford_index(const PolarizedContext& ctx, const DivisorClass& l);

// Effective M with 0 <= M^2 < (g+1)/2, 2M^2 < M.L and M.L - M^2 = (g+1)/2, lexicographic.
// Throws ParityError for even g.
std::vector<DivisorClass> special_pencil_classes(const PolarizedContext& ctx, const DivisorClass& l);

// H^2 > 0 and no root orthogonal to H: H is then ample for the chamber it defines.
Decision is_ample(const DivisorClass& h);
// Additionally nef for the chamber of the reference context.
Decision is_ample(const PolarizedContext& reference, const DivisorClass& h);

std::string describe(const Certificate& certificate);

}  // namespace k3lat
