#include <random>

#include <gtest/gtest.h>

#include "k3lat/errors.hpp"
#include "k3lat/numerology.hpp"
#include "tables.hpp"

namespace k3lat {
namespace {

TEST(Numerology, GenusAndStack) {
  EXPECT_EQ(p_arith(11, 1), 11);
  EXPECT_EQ(p_arith(8, 2), 29);
  for (int g = 2; g < 40; ++g) EXPECT_EQ(p_arith(g, 1), g);
  EXPECT_EQ(stack_dim(11, 1, 0), 30);
  EXPECT_EQ(stack_dim(8, 2, 5), 43);
  EXPECT_EQ(stack_dim(8, 2, p_arith(8, 2)), 19);
}

TEST(Numerology, Rho) {
  EXPECT_EQ(brill_noether_rho(11, 1, 6), -1);
  EXPECT_TRUE(brill_noether_expected_empty(11, 1, 6));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> gd(2, 60), dd(0, 100);
  for (int i = 0; i < 100; ++i) {
    const int g = gd(rng), d = dd(rng);
    EXPECT_EQ(brill_noether_rho(g, 0, d), d);
    EXPECT_LT(brill_noether_rho(g, 2, d), brill_noether_rho(g, 2, d + 1));
  }
  // Non-special case g - d + r = 0 gives rho = g.
  EXPECT_EQ(brill_noether_rho(9, 2, 11), 9);
}

using testing::nonprim_table;
using testing::prim_table;

TEST(Numerology, PrimitiveThresholds) {
  for (int g = 11; g <= 60; ++g) EXPECT_EQ(l_threshold_prim(g).l_g, prim_table(g)) << g;
  EXPECT_EQ(l_threshold_prim(11).r, 0);
  EXPECT_EQ(l_threshold_prim(16).r, 5);
  EXPECT_EQ(l_threshold_prim_first_stage(11), 15);
  EXPECT_EQ(l_threshold_prim_first_stage(12), 13);
}

TEST(Numerology, NonPrimitiveSpotRows) {
  EXPECT_EQ(l_threshold_nonprim(8, 2).l_g, 15);
  EXPECT_EQ(l_threshold_nonprim(8, 3).l_g, 16);
  EXPECT_EQ(l_threshold_nonprim(10, 2).l_g, 17);
  for (int g = 8; g <= 40; ++g)
    for (int k = 2; k <= 5; ++k) {
      const auto t = l_threshold_nonprim(g, k);
      EXPECT_EQ(t.l_g, nonprim_table(g, k)) << g << " " << k;
      EXPECT_EQ(t.p, p_arith(g, k));
    }
  EXPECT_THROW(l_threshold_nonprim(7, 2), Error);
}

TEST(Numerology, PlaneCurveBattery) {
  EXPECT_FALSE(greuel_bound(10, 0, 10));  // 60 >= 159/4 - 5
  EXPECT_FALSE(greuel_bound(1, 1, 0));
  EXPECT_TRUE(greuel_bound(24, 0, 10));
  EXPECT_TRUE(hirschowitz_vanishing(3, {2}));
  EXPECT_TRUE(hirschowitz_vanishing(0, {1}));
  EXPECT_TRUE(blowup_very_ample(5, 15));
  EXPECT_FALSE(blowup_very_ample(4, 1));
  EXPECT_TRUE(blowup_very_ample(6, 22));
  EXPECT_FALSE(blowup_very_ample(6, 23));
  EXPECT_TRUE(marked_wahl_conditions(24, 0, 10).overall);
  EXPECT_FALSE(marked_wahl_conditions(23, 0, 10).overall);
  EXPECT_TRUE(marked_wahl_conditions(24, 5, 10).overall);
  EXPECT_FALSE(marked_wahl_conditions(24, 6, 10).cond2);
  EXPECT_EQ(plane_genus(24, 0, 10), 223);
  EXPECT_EQ(plane_genus(10, 3, 0), 33);
  EXPECT_EQ(plane_genus(7, 0, 0), 15);
}

TEST(Numerology, MarkedWahlGenus) {
  auto at0 = marked_wahl_genus(0);
  EXPECT_EQ(at0.d, 24);
  EXPECT_EQ(at0.h, 223);
  auto at5 = marked_wahl_genus(5);
  EXPECT_EQ(at5.d, 24);
  EXPECT_EQ(at5.h, 218);
  Integer prev = 0;
  for (int l = 0; l <= 40; ++l) {
    const auto r = marked_wahl_genus(l);
    EXPECT_GE(r.d, prev);
    EXPECT_TRUE(greuel_bound(r.d, l, 10));
    prev = r.d;
  }
  EXPECT_THROW(marked_wahl_genus(-1), Error);
}

TEST(Numerology, WahlBoundGates) {
  EXPECT_TRUE(wahl_bound_check(13, 1, 0));
  EXPECT_FALSE(wahl_bound_check(13, 1, 1));
  EXPECT_TRUE(wahl_bound_check(8, 2, 5));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> gd(2, 40), kd(1, 4), nd(0, 30);
  for (int i = 0; i < 50; ++i) {
    const int g = gd(rng), k = kd(rng), n = nd(rng);
    EXPECT_EQ(wahl_bound_check(g, k, n), testing::wahl_gate(g, k, n)) << g << " " << k << " " << n;
  }
}

TEST(Numerology, EulerBudget) {
  auto check = [](int a, int total, int t, int i2) {
    const auto b = euler_fibre_budget(a, total);
    EXPECT_EQ(b.two_node_fibres, t);
    EXPECT_EQ(b.one_node_fibres, i2);
    EXPECT_LE(3 * b.two_node_fibres + 2 * b.one_node_fibres, total);
  };
  check(10, 24, 4, 6);
  check(0, 24, 0, 0);
  check(12, 24, 0, 12);
  EXPECT_THROW(euler_fibre_budget(13, 24), Error);
}

}  // namespace
}  // namespace k3lat
