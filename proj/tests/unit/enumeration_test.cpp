#include <random>

#include <gtest/gtest.h>

#include "k3lat/enumeration.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/named_lattices.hpp"
#include "oracles.hpp"

namespace k3lat {
namespace {

using testing::brute_force_window;
using testing::coords_of;

TEST(Enumerate, OmegaIsotropicClassesOfDegreeSixContainE) {
  OmegaParams p;
  p.g = 11;
  p.d = {3, 3, 3, 3, 3, 3, 3, 1};
  const auto lat = build_omega(p);
  const auto L = DivisorClass::basis(lat, "L");
  const auto res = enumerate_by_square_and_degree({L, 0, 6, 6});
  EXPECT_NE(std::find(res.classes.begin(), res.classes.end(), DivisorClass::basis(lat, "E")), res.classes.end());
  for (const auto& c : res.classes) {
    EXPECT_EQ(c.square(), 0);
    EXPECT_EQ(pairing(c, L), 6);
  }
  EXPECT_TRUE(std::is_sorted(res.classes.begin(), res.classes.end()));
}

TEST(Enumerate, EmptyDegreeRange) {
  const auto lat = build_Lambda(14);
  EXPECT_TRUE(enumerate_by_square_and_degree({DivisorClass::basis(lat, "D"), -2, 1, 0}).classes.empty());
}

TEST(Enumerate, LambdaRootsMatchWideBox) {
  const auto lat = build_Lambda(14);
  const auto D = DivisorClass::basis(lat, "D");
  const auto res = enumerate_by_square_and_degree({D, -2, 1, 6});
  const std::vector<Integer> box(3, 60);
  EXPECT_EQ(coords_of(res.classes), brute_force_window(D, -2, -2, 1, 6, box));
  EXPECT_FALSE(res.classes.empty());
}

TEST(Enumerate, BoxRecordedByTheEngineContainsTheOracleSet) {
  const auto lat = build_Lambda(17);
  const auto D = DivisorClass::basis(lat, "D");
  const auto res = enumerate_by_square_and_degree({D, 0, 0, 12});
  for (const auto& c : brute_force_window(D, 0, 0, 0, 12, std::vector<Integer>(3, 40)))
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(abs(c[i]), res.bound.box[i]);
}

TEST(Enumerate, NegatedDegreeRangeGivesNegatedClasses) {
  const auto lat = build_K(3);
  const auto h = k_reference(lat);
  for (int s : {-2, 0}) {
    const auto pos = enumerate_by_square_and_degree({h, s, 2, 5}).classes;
    const auto neg = enumerate_by_square_and_degree({h, s, -5, -2}).classes;
    std::set<testing::Coords> flipped;
    for (const auto& c : pos) flipped.insert((-c).coords());
    EXPECT_EQ(coords_of(neg), flipped);
  }
}

TEST(Enumerate, RejectsBadQueries) {
  const auto lat = build_Lambda(14);
  const auto F = DivisorClass::basis(lat, "F");
  try {
    enumerate_by_square_and_degree({F, -2, 0, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositiveClass);
  }
  const auto definite = GramLattice::make(IntMatrix{{-2, 1}, {1, -2}});
  try {
    enumerate_by_square_and_degree({DivisorClass::basis(definite, 0), -2, 0, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.kind() == ErrorKind::SignatureError || e.kind() == ErrorKind::NotPositiveClass);
  }
}

TEST(Enumerate, RandomRankThreeAgainstBruteForce) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 15; ++t) {
    const auto lat = testing::random_hyperbolic_rank3(rng);
    const auto h = testing::find_ample(rng, lat);
    for (int s : {-2, 0, 2}) {
      const auto res = enumerate_by_square_and_degree({h, s, -4, 8});
      EXPECT_EQ(coords_of(res.classes), brute_force_window(h, s, s, -4, 8)) << "trial " << t << " square " << s;
    }
  }
}

TEST(RootsOrthogonal, Examples) {
  const auto hyp = build_hyperbolic_plus_roots(1);
  const DivisorClass d(hyp, {1, 1, 0});
  const auto r = DivisorClass::basis(hyp, 2);
  const DivisorClass ef(hyp, {1, -1, 0});
  // x + y = 0 and x^2 + z^2 = 1 leave exactly +-(e - f) and +-r.
  EXPECT_EQ(coords_of(roots_orthogonal_to(d)), coords_of({r, -r, ef, -ef}));

  const auto p = build_P(17, 11);
  const auto M = DivisorClass::basis(p, "M");
  EXPECT_TRUE(roots_orthogonal_to(M).empty());
  EXPECT_TRUE(brute_force_window(M, -2, -2, 0, 0).empty());

  OmegaParams op;
  op.g = 11;
  op.d = {3, 3, 3, 3, 3, 3, 3, 1};
  const auto omega = build_omega(op);
  EXPECT_TRUE(roots_orthogonal_to(DivisorClass::basis(omega, "L") - DivisorClass::basis(omega, "E")).empty());
}

TEST(RootsOrthogonal, RequiresPositiveClass) {
  const auto hyp = build_hyperbolic_plus_roots(1);
  try {
    roots_orthogonal_to(DivisorClass(hyp, {1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPositiveClass);
  }
}

}  // namespace
}  // namespace k3lat
