#include <gtest/gtest.h>

#include "k3lat/curve_config.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/named_lattices.hpp"
#include "k3lat/numerology.hpp"

namespace k3lat {
namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::RangeError;
}

LatticePtr omega11() {
  OmegaParams p;
  p.g = 11;
  p.d = {3, 3, 3, 3, 3, 3, 3, 1};
  return build_omega(p);
}

// Independent genus count: sum of genera + nodes - components + 1.
Integer genus_by_hand(const std::vector<Integer>& genera, const std::vector<Integer>& edge_mults) {
  Integer g = 1 - Integer(genera.size());
  for (const auto& x : genera) g += x;
  for (const auto& m : edge_mults) g += m;
  return g;
}

TEST(Genus, FirstPrimitiveConfiguration) {
  const auto lat = omega11();
  const auto L = DivisorClass::basis(lat, "L");
  const auto E = DivisorClass::basis(lat, "E");
  const auto G1 = DivisorClass::basis(lat, "G1");
  const auto c = CurveConfiguration::make({{"C", 11, L}, {"R11", 0, G1}, {"R12", 0, E - G1}},
                                          {{0, 1, 1}, {1, 2, 2}});
  EXPECT_EQ(arithmetic_genus(c), 12);
  EXPECT_EQ(arithmetic_genus(c), genus_by_hand({11, 0, 0}, {1, 2}));
  EXPECT_EQ(total_class(c), L + E);
  const auto obs = decomposition_obstruction(c, L + E, 1);
  EXPECT_TRUE(obs.holds);
}

TEST(Genus, SingleComponentAndCycle) {
  const auto lat = omega11();
  const auto L = DivisorClass::basis(lat, "L");
  EXPECT_EQ(arithmetic_genus(CurveConfiguration::make({{"C", 7, L}}, {})), 7);
  std::vector<Component> comps;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    comps.push_back({"R" + std::to_string(i), 0, DivisorClass::basis(lat, "G" + std::to_string(i + 1))});
    edges.push_back({i, (i + 1) % 5, 1});
  }
  EXPECT_EQ(arithmetic_genus(CurveConfiguration::make(comps, edges)), 1);
}

TEST(Genus, AttachingByREdgesAddsRMinusOne) {
  const auto lat = omega11();
  const auto L = DivisorClass::basis(lat, "L");
  const auto G = DivisorClass::basis(lat, "G2");
  for (int r = 1; r <= 5; ++r) {
    const auto c = CurveConfiguration::make({{"C", 11, L}, {"R", 0, G}}, {{0, 1, r}});
    EXPECT_EQ(arithmetic_genus(c), 11 + r - 1);
  }
}

TEST(Genus, DisconnectedAndPieces) {
  const auto lat = omega11();
  const auto L = DivisorClass::basis(lat, "L");
  const auto c = CurveConfiguration::make({{"A", 3, L}, {"B", 4, L}}, {});
  EXPECT_EQ(kind_of([&] { arithmetic_genus(c); }), ErrorKind::Disconnected);
  const auto pieces = arithmetic_genus_per_piece(c);
  ASSERT_EQ(pieces.size(), 2u);
  EXPECT_EQ(pieces[0].genus + pieces[1].genus, 7);
}

TEST(Config, ValidationAndMerging) {
  const auto lat = omega11();
  const auto L = DivisorClass::basis(lat, "L");
  const auto G = DivisorClass::basis(lat, "G1");
  EXPECT_EQ(kind_of([&] { CurveConfiguration::make({{"A", 0, L}, {"A", 0, G}}, {}); }), ErrorKind::ShapeError);
  EXPECT_EQ(kind_of([&] { CurveConfiguration::make({{"A", 0, L}}, {{0, 0, 1}}); }), ErrorKind::ShapeError);
  EXPECT_EQ(kind_of([&] { CurveConfiguration::make({{"A", 0, L}, {"B", 0, G}}, {{0, 1, 0}}); }), ErrorKind::ShapeError);
  EXPECT_EQ(kind_of([&] { CurveConfiguration::make({{"A", 0, L}, {"B", 0, G}}, {{0, 2, 1}}); }), ErrorKind::ShapeError);
  const auto c = CurveConfiguration::make({{"A", 0, L}, {"B", 0, G}}, {{0, 1, 1}, {1, 0, 2}});
  EXPECT_EQ(c.multiplicity(0, 1), 3);
  EXPECT_EQ(c.edges().size(), 1u);
  EXPECT_TRUE(total_class(CurveConfiguration::make({}, {})).lattice() == nullptr ||
              total_class(CurveConfiguration::make({}, {})).is_zero());
}

TEST(Obstruction, TwoCopiesSplit) {
  const auto lat = omega11();
  const auto L = DivisorClass::basis(lat, "L");
  const auto c = CurveConfiguration::make({{"A", 11, L}, {"B", 11, L}}, {{0, 1, 20}});
  const auto obs = decomposition_obstruction(c, L, 2);
  EXPECT_FALSE(obs.holds);
  EXPECT_EQ(obs.violating.size(), 1u);
  EXPECT_EQ(kind_of([&] { decomposition_obstruction(c, L, 3); }), ErrorKind::ClassMismatch);
}

TEST(Obstruction, TooManyComponents) {
  const auto lat = omega11();
  const auto E = DivisorClass::basis(lat, "E");
  std::vector<Component> comps;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 25; ++i) {
    comps.push_back({"F" + std::to_string(i), 1, E});
    if (i) edges.push_back({i - 1, i, 1});
  }
  const auto c = CurveConfiguration::make(comps, edges);
  EXPECT_EQ(kind_of([&] { decomposition_obstruction(c, E, 25); }), ErrorKind::TooLarge);
}

TEST(TheoremConfigs, PrimitiveResidueZero) {
  for (int g : {17, 23}) {
    const auto t = build_theorem_config(TheoremKind::PrimR0, g);
    EXPECT_EQ(arithmetic_genus(t.config), 12) << g;
    const int m = (g - 11) / 6;
    const auto lat = t.lattice;
    EXPECT_EQ(total_class(t.config), DivisorClass::basis(lat, "L") + Integer(m) * DivisorClass::basis(lat, "E"));
    EXPECT_EQ(total_class(t.config), t.polarization);
    EXPECT_TRUE(decomposition_obstruction(t.config, t.polarization, 1).holds);
  }
  EXPECT_EQ(kind_of([] { build_theorem_config(TheoremKind::PrimR0, 18); }), ErrorKind::RangeError);
}

TEST(TheoremConfigs, LiteralEdgeRuleAgreesForSmallM) {
  for (int m : {1, 2}) {
    const auto t = build_theorem_config(TheoremKind::PrimR0, 11 + 6 * m, 1, prim_r0_edges(m, R0EdgeRule::AsWritten));
    EXPECT_EQ(arithmetic_genus(t.config), 12);
  }
}

TEST(TheoremConfigs, PrimitiveGeneral) {
  for (int g = 12; g <= 16; ++g) {
    const auto t = build_theorem_config(TheoremKind::PrimGeneral, g);
    EXPECT_EQ(arithmetic_genus(t.config), l_threshold_prim(g).l_g) << g;
    EXPECT_EQ(t.polarization.square(), 2 * g - 2);
    EXPECT_TRUE(decomposition_obstruction(t.config, t.polarization, 1).holds);
  }
  const auto t12 = build_theorem_config(TheoremKind::PrimGeneral, 12);
  EXPECT_FALSE(transversality_violations(t12.config).empty());
  const auto t17 = build_theorem_config(TheoremKind::PrimGeneral, 13);
  EXPECT_TRUE(transversality_violations(t17.config).empty());
}

TEST(TheoremConfigs, NonPrimitive) {
  const auto t = build_theorem_config(TheoremKind::NonPrim, 8, 2);
  EXPECT_EQ(arithmetic_genus(t.config), 14);
  EXPECT_EQ(l_threshold_nonprim(8, 2).l_g, 15);
  EXPECT_EQ(t.l, 0);
  EXPECT_EQ(total_class(t.config), Integer(2) * t.polarization);
  for (int g = 14; g <= 20; ++g) {
    const auto u = build_theorem_config(TheoremKind::NonPrim, g, 2);
    if (u.l == 0) continue;
    EXPECT_EQ(arithmetic_genus(u.config), l_threshold_nonprim(g, 2).l_g) << g;
    EXPECT_TRUE(decomposition_obstruction(u.config, u.polarization, 2, PartConnectivity::Connected).holds) << g;
  }
}

}  // namespace
}  // namespace k3lat
