#include <gtest/gtest.h>

#include "k3lat/errors.hpp"
#include "k3lat/kummer.hpp"
#include "k3lat/named_lattices.hpp"

namespace k3lat {
namespace {

TEST(Omega, PairingsAndBounds) {
  OmegaParams p;
  p.g = 11;
  p.d = {3, 3, 3, 3, 3, 3, 3, 1};
  const auto lat = build_omega(p);
  EXPECT_EQ(lat->entry(0, 1), 6);
  EXPECT_EQ(lat->entry(2, 2), -2);
  EXPECT_EQ(omega_half(6), 3);
  p.g = 6;
  p.d.fill(1);
  EXPECT_EQ(build_omega(p)->entry(0, 1), 3);
  p.g = 11;
  p.d[0] = 6;
  EXPECT_THROW(build_omega(p), Error);
}

TEST(P, SecondEntryCases) {
  EXPECT_EQ(p_data(17, 11).s1, 5);
  EXPECT_EQ(p_data(13, 11).s1, 3);
  EXPECT_EQ(p_data(13, 11).m, 2);
  EXPECT_EQ(p_data(12, 11).s1, 2);
  const auto lat = build_P(17, 11);
  EXPECT_EQ(lat->entry(0, 0), 20);
  EXPECT_EQ(lat->entry(0, 1), 5);
  EXPECT_EQ(lat->entry(0, 2), 3);
  EXPECT_THROW(build_P(11, 11), Error);
  EXPECT_THROW(build_P(10, 7), Error);
}

TEST(P, EmbeddingsArePrimitiveForAllBranches) {
  for (int h = 8; h <= 13; ++h)
    for (int p = h + 1; p <= h + 20; ++p) {
      const auto e = p_embedding(p, h);
      const auto rep = verify_embedding(*build_P(p, h), *build_omega(e.omega), e.map);
      EXPECT_TRUE(rep.is_isometric && rep.is_primitive) << p << "," << h;
    }
}

TEST(Lambda, GramAndSolutions) {
  EXPECT_EQ(build_Lambda(14)->entry(0, 0), 26);
  EXPECT_EQ(build_Lambda(19)->entry(0, 0), 36);
  for (int a = 14; a <= 19; ++a) {
    const auto sols = lambda_solutions(a);
    EXPECT_FALSE(sols.empty()) << a;
    for (const auto& s : sols) {
      const auto rep = verify_embedding(*build_Lambda(a), *build_omega(s.omega), s.map);
      EXPECT_TRUE(rep.is_isometric && rep.is_primitive) << a;
      EXPECT_GE(s.d1, 3);
      EXPECT_LE(s.d2, 5);
    }
  }
  // With eps = 0 the square is 2(10 + d1) - 2, so a = 13 is reachable as well.
  const auto at13 = lambda_solutions(13);
  ASSERT_FALSE(at13.empty());
  for (const auto& s : at13) EXPECT_EQ(s.eps, 0);
}

TEST(Lambda, BarChangeOfBasis) {
  for (int a = 14; a <= 19; ++a)
    EXPECT_TRUE(change_basis_isometry(*build_Lambda(a), *build_Lambda_bar(a), to_rational(lambda_to_lambda_bar())));
}

TEST(K, GramEntriesAndEmbeddings) {
  for (int d = 1; d <= 5; ++d) {
    const auto k = build_K(d);
    EXPECT_EQ(k->entry(0, 1), 6);
  }
  EXPECT_EQ(build_K(1)->entry(0, 4), 1);
  EXPECT_THROW(build_K(0), Error);
  EXPECT_THROW(build_K(6), Error);
  EXPECT_EQ(lambda_bar_embeddings(14).size(), 5u);
  for (int a = 14; a <= 19; ++a)
    for (const auto& e : lambda_bar_embeddings(a)) {
      const auto rep = verify_embedding(*build_Lambda_bar(a), *build_K(e.d), e.map);
      EXPECT_TRUE(rep.is_isometric && rep.is_primitive) << a << " " << e.d;
    }
}

TEST(Kummer, TreeCombinations) {
  const KummerSpan span;
  const auto A = span.combination("S1+E11+T1+E12+S2+E13+S3");
  EXPECT_EQ(span.pairing(A, A), -2);
  const auto G2 = span.combination("T2+E21+E22");
  EXPECT_EQ(span.pairing(G2, G2), -2);
  EXPECT_EQ(span.pairing(A, G2), 2);
  const auto exprs = kummer_curve_expressions(3);
  EXPECT_EQ(span.pairing(span.combination(exprs[0]), span.combination(exprs[1])), 6);
  EXPECT_THROW(span.index_of("Q9"), Error);
}

TEST(Kummer, VerificationForEveryD) {
  const KummerSpan span;
  for (int d = 1; d <= 5; ++d) {
    const auto k = verify_kummer(d, span);
    EXPECT_TRUE(k.gram_matches) << d;
    EXPECT_TRUE(k.primitive) << d;
  }
}

TEST(Kummer, CorruptedFibrePairingBreaksTheGram) {
  const KummerSpan bad(0);
  const auto k = verify_kummer(3, bad);
  EXPECT_FALSE(k.gram_matches);
  EXPECT_NE(k.gram(0, 1), 6);
}

}  // namespace
}  // namespace k3lat
