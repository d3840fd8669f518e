#pragma once

// Threshold tables transcribed by hand from the case analysis, kept apart from the library
// formulas so the two can be compared.

#include "k3lat/integer.hpp"

namespace k3lat::testing {

// Primitive case, g >= 11.
inline int prim_table(int g) {
  const int r = (g - 11) % 6;
  if (r == 0) return 12;
  if (r == 5) return 15;
  return 13;
}

// Non-primitive case, g >= 8 and k >= 2. With m = (g-5)/6 and r = g - 5 - 6m.
inline int nonprim_table(int g, int k) {
  const int m = (g - 5) / 6;
  const int r = g - 5 - 6 * m;
  const bool m_odd = m % 2 == 1;
  const bool k_even = k % 2 == 0;
  if (r == 3 || r == 4) return (m_odd || k_even) ? 15 : 16;
  if (r == 5) return (m_odd || k_even) ? 17 : 18;
  return (!m_odd || k_even) ? 17 : 18;
}

// Hypotheses of the Wahl-map bound: 5n <= p - 2, and g - n >= 13 for k = 1 or g >= 8 for k >= 2.
inline bool wahl_gate(int g, int k, int n) {
  const Integer p = Integer(k) * k * (g - 1) + 1;
  return 5 * n <= p - 2 && (k == 1 ? g - n >= 13 : g >= 8);
}

}  // namespace k3lat::testing
