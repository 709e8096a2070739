#include <gtest/gtest.h>

#include <random>

#include "lgk/chidata.hpp"
#include "lgk/error.hpp"
#include "lgk/splitinv.hpp"

namespace lgk {
namespace {

constexpr Int N = 24;

TEST(AData, NegateRankOne) {
  auto a1 = buildFromLabel("A1", Isogeny::SimplyConnected);
  const auto s = TwistedTorusDatum::split(a1, N);
  const KElem i = KElem::i(N);
  const AData a{{i, i * KElem::minusOne(N)}};
  ASSERT_FALSE(validateAData(s, a));
  const AData neg = negateA(a);
  EXPECT_EQ(neg.values[0], i * KElem::minusOne(N));
  EXPECT_FALSE(validateAData(s, neg));
}

TEST(AData, NegationKeepsThetaInvariance) {
  auto a2 = buildFromLabel("A2", Isogeny::SimplyConnected);
  const auto flip = PinnedAutomorphism::fromPermutation(a2, {1, 0});
  const auto s = TwistedTorusDatum::split(a2, N);
  AData a;
  const KElem x = KElem::symbol(N, "x"), y = KElem::symbol(N, "y");
  // positives alpha1, alpha2, alpha1+alpha2, then negatives
  a.values = {x, x, y, x * KElem::minusOne(N), x * KElem::minusOne(N), y * KElem::minusOne(N)};
  ASSERT_FALSE(validateAData(s, a, &flip));
  EXPECT_FALSE(validateAData(s, negateA(a), &flip));
}

TEST(AData, RandomB2WithZ2) {
  auto b2 = buildFromLabel("B2", Isogeny::SimplyConnected);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto inst = randomSplcngInstance(b2, 2, seed, N);
    EXPECT_FALSE(validateAData(inst.torus, inst.a));
    EXPECT_FALSE(validateAData(inst.torus, negateA(inst.a)));
    EXPECT_FALSE(validateAData(inst.torus, scaleA(inst.torus, inst.c, inst.a)));
  }
}

TEST(AData, InvalidDataIsReported) {
  auto a1 = buildFromLabel("A1", Isogeny::SimplyConnected);
  const auto s = TwistedTorusDatum::split(a1, N);
  EXPECT_TRUE(validateAData(s, AData{{KElem::i(N), KElem::i(N)}}).has_value());
}

TEST(ChiData, RandomAndNegated) {
  std::mt19937_64 rng(5);
  auto a2 = buildFromLabel("A2", Isogeny::Adjoint);
  const auto w = WeylElem::fromWord(a2, {0, 1});
  const auto s = TwistedTorusDatum::cyclic(a2, CoeffAction::trivial(FiniteGroup::cyclic(3), N), w,
                                           PinnedAutomorphism::identity(a2));
  for (int k = 0; k < 10; ++k) {
    const ChiData x = randomChiData(s, rng);
    ASSERT_FALSE(validateChiData(s, x));
    const ChiData nx = negateX(x);
    EXPECT_FALSE(validateChiData(s, nx));
    for (std::size_t a = 0; a < a2->numRoots(); ++a) {
      EXPECT_EQ(characterOrder(nx, a), characterOrder(x, a));
      EXPECT_EQ(((x.exponents[a] + nx.exponents[a]) % N + N) % N, 0);
    }
  }
}

TEST(Scaling, MustBeInvariant) {
  auto a2 = buildFromLabel("A2", Isogeny::SimplyConnected);
  const auto s = TwistedTorusDatum::split(a2, N);
  ScalingVector c = constantScaling(*a2, KElem::symbol(N, "c"));
  EXPECT_NO_THROW(requireInvariantScaling(s, c));
  c[0] = KElem::one(N);
  EXPECT_THROW(requireInvariantScaling(s, c), Error);
}

TEST(Orbits, Classification) {
  auto a3 = buildFromLabel("A3", Isogeny::SimplyConnected);
  for (const auto& o : thetaOrbits(*a3, PinnedAutomorphism::identity(a3))) {
    EXPECT_EQ(o.roots.size(), 1u);
    EXPECT_EQ(o.type, OrbitType::R1);
  }
  EXPECT_EQ(classifyOrbit(*a3, {0, 2}), OrbitType::R1);
  auto a2 = buildFromLabel("A2", Isogeny::SimplyConnected);
  EXPECT_EQ(classifyOrbit(*a2, {0, 1}), OrbitType::R2);
  const auto orbits = thetaOrbits(*a2, PinnedAutomorphism::fromPermutation(a2, {1, 0}));
  ASSERT_FALSE(orbits.empty());
  EXPECT_EQ(orbits.front().roots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(orbits.front().type, OrbitType::R2);
}

TEST(Orbits, MinusOnePreservesOrbits) {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"}) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    for (const auto& p : diagramAutomorphisms(*d))
      EXPECT_TRUE(minusOnePreservesOrbits(*d, PinnedAutomorphism::fromPermutation(d, p)).holds) << t;
  }
}

TEST(Orbits, CustomR3Predicate) {
  auto a2 = buildFromLabel("A2", Isogeny::SimplyConnected);
  const OrbitClassifier all = [](const BasedRootDatum&, const std::vector<std::size_t>&) { return true; };
  EXPECT_EQ(classifyOrbit(*a2, {0, 1}, all), OrbitType::R3);
}

}  // namespace
}  // namespace lgk
