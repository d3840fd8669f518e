#include "k3lat/numerology.hpp"

#include "k3lat/errors.hpp"

namespace k3lat {

Integer p_arith(const Integer& g, const Integer& k) {
  if (g < 2 || k < 1) raise(ErrorKind::RangeError, "p_arith needs g >= 2 and k >= 1");
  return k * k * (g - 1) + 1;
}

Integer stack_dim(const Integer& g, const Integer& k, const Integer& n) {
  if (n < 0) raise(ErrorKind::RangeError, "negative node count");
  return p_arith(g, k) - n + 19;
}

Integer brill_noether_rho(const Integer& g, const Integer& r, const Integer& d) { return g - (r + 1) * (g - d + r); }

bool brill_noether_expected_empty(const Integer& g, const Integer& r, const Integer& d) {
  return brill_noether_rho(g, r, d) < 0;
}

Thresholds l_threshold_prim(const Integer& g) {
  if (g < 11) raise(ErrorKind::RangeError, "primitive thresholds start at g = 11");
  Thresholds t;
  t.g = g;
  t.k = 1;
  t.p = g;
  t.m = (g - 11) / 6;
  t.r = g - 11 - 6 * t.m;
  if (t.r == 0) {
    t.l_g = 12;
    t.case_tag = "prim r=0: 12 via the rank-10 configuration (first-stage value 15)";
  } else if (t.r < 5) {
    t.l_g = 13;
    t.case_tag = "prim 1<=r<=4: 13 via the rank-3 configuration with eps=0";
  } else {
    t.l_g = 15;
    t.case_tag = "prim r=5: 15 via the rank-3 configuration with eps=1";
  }
  t.n_max = t.p - t.l_g;
  return t;
}

Integer l_threshold_prim_first_stage(const Integer& g) {
  const Thresholds t = l_threshold_prim(g);
  return (t.r == 0 || t.r == 5) ? Integer(15) : Integer(13);
}

Thresholds l_threshold_nonprim(const Integer& g, const Integer& k) {
  if (k < 2 || g < 8) raise(ErrorKind::RangeError, "non-primitive thresholds need k >= 2 and g >= 8");
  Thresholds t;
  t.g = g;
  t.k = k;
  t.p = p_arith(g, k);
  t.m = (g - 5) / 6;
  t.r = g - 5 - 6 * t.m;
  const bool m_odd = t.m % 2 != 0;
  const bool k_even = k % 2 == 0;
  if (t.r == 3 || t.r == 4) {
    t.l_g = (m_odd || k_even) ? 15 : 16;
    t.case_tag = "nonprim r in {3,4}";
  } else if (t.r == 5) {
    t.l_g = (m_odd || k_even) ? 17 : 18;
    t.case_tag = "nonprim r=5";
  } else {
    t.l_g = (!m_odd || k_even) ? 17 : 18;
    t.case_tag = "nonprim r<=2";
  }
  t.case_tag += (t.l_g % 2 == 1) ? ", even fibre count" : ", odd fibre count";
  t.n_max = t.p - t.l_g;
  return t;
}

bool greuel_bound(const Integer& d, const Integer& n, const Integer& m) {
  return 4 * (3 * n + 6 * m) < d * d + 6 * d - 1 - 4 * floor_div(d, 2);
}

bool hirschowitz_vanishing(const Integer& d, const std::vector<Integer>& multiplicities) {
  Integer total = 0;
  for (const auto& m : multiplicities) total += m * (m + 1) / 2;
  return total < floor_div((d + 3) * (d + 3), 4);
}

bool blowup_very_ample(const Integer& d, const Integer& points) {
  return d >= 5 && points + 6 <= (d + 1) * (d + 2) / 2;
}

WahlConditions marked_wahl_conditions(const Integer& d, const Integer& n, const Integer& m) {
  WahlConditions w;
  w.cond1 = 3 * n + 6 * m < floor_div((d - 5) * (d - 5), 4);
  w.cond2 = 18 * (n + m + 6) <= (d - 6) * (d - 3);
  w.overall = d >= 24 && m >= 10 && w.cond1 && w.cond2;
  return w;
}

Integer plane_genus(const Integer& d, const Integer& n, const Integer& m) {
  return (d - 1) * (d - 2) / 2 - n - 3 * m;
}

PlaneCurveData marked_wahl_genus(const Integer& l) {
  if (l < 0) raise(ErrorKind::RangeError, "node count must be non-negative");
  const Integer cap = 10 * (l + 12);
  for (Integer d = 24; d <= cap; ++d)
    if (marked_wahl_conditions(d, l, 10).overall) return {d, plane_genus(d, l, 10)};
  raise(ErrorKind::RangeError, "no admissible degree up to " + cap.str());
}

bool wahl_bound_check(const Integer& g, const Integer& k, const Integer& n) {
  const Integer p = p_arith(g, k);
  if (5 * n > p - 2) return false;
  if (k == 1) return g - n >= 13;
  return g >= 8;
}

FibreBudget euler_fibre_budget(const Integer& a1, const Integer& total) {
  if (a1 < 0) raise(ErrorKind::RangeError, "negative fibre count");
  // 3t + 2(a1 - t) <= total  <=>  t <= total - 2 a1
  Integer t = total - 2 * a1;
  if (t < 0) raise(ErrorKind::RangeError, "fibre budget exceeded even without two-node fibres");
  if (t > a1) t = a1;
  return {t, a1 - t};
}

}  // namespace k3lat
