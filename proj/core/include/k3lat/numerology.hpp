#pragma once

#include <string>
#include <vector>

#include "k3lat/integer.hpp"

namespace k3lat {

// Genus of a curve in |kH| when H^2 = 2g - 2: k^2 (g-1) + 1.
Integer p_arith(const Integer& g, const Integer& k);

// p(g,k) - n + 19.
Integer stack_dim(const Integer& g, const Integer& k, const Integer& n);

// g - (r+1)(g-d+r).
Integer brill_noether_rho(const Integer& g, const Integer& r, const Integer& d);
bool brill_noether_expected_empty(const Integer& g, const Integer& r, const Integer& d);

struct Thresholds {
  Integer g;
  Integer k;
  Integer p;
  Integer n_max;  // largest n with g - n >= l_g (negative when no n qualifies)
  Integer l_g;
  Integer m;      // quotient in the residue split
  Integer r;      // residue
  std::string case_tag;
};

// Primitive case, g >= 11: m = floor((g-11)/6), r = g - 11 - 6m.
Thresholds l_threshold_prim(const Integer& g);
// First-stage value before the r = 0 improvement (15 when r in {0, 5}, 13 otherwise).
Integer l_threshold_prim_first_stage(const Integer& g);
// Non-primitive case, k >= 2, g >= 8: m = floor((g-5)/6), r = g - 5 - 6m.
Thresholds l_threshold_nonprim(const Integer& g, const Integer& k);

// 3n + 6m < (d^2 + 6d - 1)/4 - floor(d/2), compared exactly after scaling by 4.
bool greuel_bound(const Integer& d, const Integer& n, const Integer& m);

// sum m_i (m_i + 1)/2 < floor((d+3)^2 / 4).
bool hirschowitz_vanishing(const Integer& d, const std::vector<Integer>& multiplicities);

// d >= 5 and points + 6 <= (d+1)(d+2)/2.
bool blowup_very_ample(const Integer& d, const Integer& points);

struct WahlConditions {
  bool cond1 = false;  // 3n + 6m < floor((d-5)^2 / 4)
  bool cond2 = false;  // n + m + 6 <= (d-6)(d-3)/18
  bool overall = false;
};
// overall also requires d >= 24 and m >= 10.
WahlConditions marked_wahl_conditions(const Integer& d, const Integer& n, const Integer& m);

// (d-1)(d-2)/2 - n - 3m.
Integer plane_genus(const Integer& d, const Integer& n, const Integer& m);

struct PlaneCurveData {
  Integer d;
  Integer h;
};
// Smallest d with marked_wahl_conditions(d, l, 10).overall, scanned up to 10 (l + 12);
// h = plane_genus(d, l, 10). Throws RangeError for l < 0 or when the scan cap is hit.
PlaneCurveData marked_wahl_genus(const Integer& l);

// 5n <= p - 2, with g - n >= 13 when k = 1 and g >= 8 when k > 1.
bool wahl_bound_check(const Integer& g, const Integer& k, const Integer& n);

struct FibreBudget {
  Integer two_node_fibres;  // largest t with 3t + 2(a1 - t) <= total
  Integer one_node_fibres;  // a1 - t
};
// Throws RangeError when even t = 0 exceeds the budget or a1 < 0.
FibreBudget euler_fibre_budget(const Integer& a1, const Integer& total);

}  // namespace k3lat
