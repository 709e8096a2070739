#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lgk/endofourier.hpp"
#include "lgk/error.hpp"

namespace lgk {
namespace {

PacketTable identityTable(const FinAbGroup& g) {
  std::vector<std::string> labels;
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t k = 0; k < g.order(); ++k) labels.push_back("pi" + std::to_string(k));
  return PacketTable(g, labels, perm);
}

TEST(FinAbGroup, Basics) {
  const FinAbGroup g({2, 4});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.exponent(), 4);
  for (std::size_t k = 0; k < g.order(); ++k) EXPECT_EQ(g.index(g.element(k)), k);
  EXPECT_EQ(g.add(IntVec{1, 3}, IntVec{1, 2}), (IntVec{0, 1}));
  EXPECT_THROW(FinAbGroup({4, 2}), Error);
}

TEST(FinAbGroup, EnumerationUpTo) {
  std::size_t count8 = 0;
  for (const auto& g : abelianGroupsUpTo(8)) {
    EXPECT_LE(g.order(), 8u);
    if (g.order() == 8) ++count8;
  }
  EXPECT_EQ(count8, 3u);
  // sum over n <= 64 of prod_p partitions(v_p(n))
  EXPECT_EQ(abelianGroupsUpTo(64).size(), 117u);
}

TEST(Fourier, Z2Average) {
  const FinAbGroup g({2});
  const auto t = identityTable(g);
  const auto theta = fourierInvert(t, {Cyc(g.field(), 2), Cyc(g.field(), 0)});
  EXPECT_EQ(theta, (std::vector<Cyc>{Cyc(g.field(), 1), Cyc(g.field(), 1)}));
}

TEST(Fourier, DeltaAtIdentity) {
  std::mt19937_64 rng(2);
  const FinAbGroup g({2, 6});
  const auto t = PacketTable::random(g, rng);
  std::vector<Cyc> delta(g.order(), Cyc(g.field(), 0));
  delta[0] = Cyc(g.field(), 1);
  for (const auto& v : fourierInvert(t, delta)) EXPECT_EQ(v, Cyc(g.field(), mpq_class(1, 12)));
}

TEST(Fourier, RoundTripKleinFour) {
  std::mt19937_64 rng(9);
  const FinAbGroup g({2, 2});
  for (int k = 0; k < 20; ++k) {
    const auto t = PacketTable::random(g, rng);
    EXPECT_FALSE(t.checkOrthogonality());
    std::vector<Cyc> stable;
    for (std::size_t s = 0; s < 4; ++s) stable.push_back(Cyc(g.field(), mpq_class(static_cast<long>(rng() % 11) - 5)));
    EXPECT_EQ(fourierForward(t, fourierInvert(t, stable)), stable);
  }
}

TEST(Fourier, DimensionMismatch) {
  const FinAbGroup g({3});
  EXPECT_THROW(fourierInvert(identityTable(g), {Cyc(g.field(), 1)}), Error);
}

TEST(Fourier, BadLabellingRejected) {
  EXPECT_THROW(PacketTable(FinAbGroup({2}), {"a", "b"}, {0, 0}), Error);
}

TEST(Whittaker, Examples) {
  const FinAbGroup z2({2});
  const auto t = identityTable(z2);
  EXPECT_EQ(whittakerShift(t, {{0}}).perm, (std::vector<std::size_t>{0, 1}));
  const auto sw = whittakerShift(t, {{1}});
  EXPECT_EQ(sw.perm, (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(sw.verified);

  const FinAbGroup k4({2, 2});
  const auto t4 = identityTable(k4);
  for (std::size_t e = 1; e < 4; ++e) {
    const auto p = whittakerShift(t4, characterAt(k4, e)).perm;
    for (std::size_t l = 0; l < 4; ++l) {
      EXPECT_NE(p[l], l);
      EXPECT_EQ(p[p[l]], l);
    }
  }
  EXPECT_THROW(whittakerShift(t4, {{1}}), Error);
}

TEST(Whittaker, Homomorphism) {
  std::mt19937_64 rng(4);
  for (const auto& f : std::vector<std::vector<Int>>{{6}, {2, 4}, {3, 3}, {2, 2, 2}}) {
    const FinAbGroup g(f);
    const auto t = PacketTable::random(g, rng);
    for (int k = 0; k < 5; ++k) {
      const Character a{g.element(rng() % g.order())}, b{g.element(rng() % g.order())};
      const auto pa = whittakerShift(t, a).perm, pb = whittakerShift(t, b).perm;
      const auto pab = whittakerShift(t, multiply(g, a, b)).perm;
      for (std::size_t l = 0; l < g.order(); ++l) EXPECT_EQ(pa[pb[l]], pab[l]);
    }
  }
}

TEST(Contragredient, Examples) {
  const FinAbGroup z4({4});
  const auto t = identityTable(z4);
  const auto inv = contragredientShift(t, inversionAutomorphism(z4));
  EXPECT_EQ(inv.perm, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_TRUE(inv.verified);
  const auto id = contragredientShift(t, identityAutomorphism(z4));
  EXPECT_EQ(id.perm, (std::vector<std::size_t>{0, 3, 2, 1}));
  EXPECT_THROW(contragredientShift(t, GroupAutomorphism{{IntVec{2}}}), Error);
}

TEST(Contragredient, DoubleApplication) {
  std::mt19937_64 rng(8);
  for (const auto& f : std::vector<std::vector<Int>>{{8}, {2, 4}, {3, 6}, {2, 2, 2}}) {
    const FinAbGroup g(f);
    const auto t = PacketTable::random(g, rng);
    for (int k = 0; k < 5; ++k) {
      const auto a = randomAutomorphism(g, rng);
      const auto p = contragredientShift(t, a).perm;
      const auto want = precomposeShift(t, composeAutomorphisms(g, a, a));
      for (std::size_t l = 0; l < g.order(); ++l) EXPECT_EQ(p[p[l]], want[l]);
    }
  }
}

TEST(Coinvariants, Examples) {
  const LatticeAction swap{2, {IntMatrix(2, 2, {0, 1, 1, 0})}, {2}};
  auto c = coinvariants(swap);
  EXPECT_EQ(c.freeRank, 1u);
  EXPECT_TRUE(c.torsion.empty());

  const LatticeAction neg{1, {IntMatrix(1, 1, {-1})}, {2}};
  c = coinvariants(neg);
  EXPECT_EQ(c.freeRank, 0u);
  EXPECT_EQ(c.torsion, std::vector<Int>{2});

  const LatticeAction triv{3, {IntMatrix::identity(3)}, {1}};
  c = coinvariants(triv);
  EXPECT_EQ(c.freeRank, 3u);
  EXPECT_TRUE(c.torsion.empty());

  EXPECT_THROW(validateLatticeAction({1, {IntMatrix(1, 1, {2})}, {2}}), Error);
}

TEST(FixedTorus, Examples) {
  const LatticeAction neg{1, {IntMatrix(1, 1, {-1})}, {2}};
  auto f = fixedTorusCharacters(neg, 4);
  EXPECT_EQ(f.pointsAtLevel, 2u);
  EXPECT_EQ(f.componentCount, 2);
  EXPECT_TRUE(f.matches);
  EXPECT_THROW(fixedTorusCharacters(neg, 3), Error);

  const LatticeAction swap{2, {IntMatrix(2, 2, {0, 1, 1, 0})}, {2}};
  f = fixedTorusCharacters(swap, 6);
  EXPECT_EQ(f.pointsAtLevel, 6u);
  EXPECT_EQ(f.freeRank, 1u);
  EXPECT_EQ(f.componentCount, 1);
  EXPECT_TRUE(f.matches);
}

TEST(FixedTorus, RandomRankThreeInvolutions) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 10; ++k) {
    const auto l = randomLatticeAction(3, 2, rng);
    EXPECT_NO_THROW(validateLatticeAction(l));
    const auto f = fixedTorusCharacters(l, 8);
    EXPECT_TRUE(f.matches);
    EXPECT_EQ(f.componentCount, coinvariants(l).torsionOrder());
  }
}

}  // namespace
}  // namespace lgk
