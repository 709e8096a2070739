#include <gtest/gtest.h>

#include <random>

#include "lgk/splitinv.hpp"

namespace lgk {
namespace {

constexpr Int N = 24;

TwistedTorusDatum a1Reflection(const DatumPtr& a1) {
  const KElem x = KElem::symbol(N, "x");
  std::vector<std::map<std::string, KElem>> images{{}, {{"x", x * KElem::minusOne(N)}}};
  return TwistedTorusDatum::cyclic(a1, CoeffAction(FiniteGroup::cyclic(2), N, {1, 1}, images),
                                   WeylElem::reflection(a1, 0), PinnedAutomorphism::identity(a1));
}

TEST(SplittingInvariant, TrivialGroup) {
  auto a2 = buildFromLabel("A2", Isogeny::SimplyConnected);
  const auto s = TwistedTorusDatum::split(a2, N);
  std::mt19937_64 rng(1);
  const AData a = randomAData(s, rng, {"x"});
  const auto core = splittingInvariantCore(s, a, constantScaling(*a2, KElem::one(N)));
  ASSERT_EQ(core.size(), 1u);
  EXPECT_EQ(core[0], ExtWeylElem::identity(a2, N));
  EXPECT_TRUE(verifySplcng(s, a, constantScaling(*a2, KElem::symbol(N, "c"))).holds);
}

TEST(SplittingInvariant, RankOneReflection) {
  auto a1 = buildFromLabel("A1", Isogeny::SimplyConnected);
  const auto s = a1Reflection(a1);
  const KElem x = KElem::symbol(N, "x"), c = KElem::symbol(N, "c");
  const AData a{{x, x * KElem::minusOne(N)}};
  ASSERT_FALSE(validateAData(s, a));
  const auto n = titsSection(WeylElem::reflection(a1, 0), N);

  const auto core = splittingInvariantCore(s, a, constantScaling(*a1, KElem::one(N)));
  EXPECT_EQ(core[1], ExtWeylElem::torus(evalCocharacter(a1, a1->coroot(0), x)) * n);

  const auto r = verifySplcng(s, a, constantScaling(*a1, c));
  EXPECT_TRUE(r.holds);
  const auto want = ExtWeylElem::torus(evalCocharacter(a1, a1->coroot(0), c * x)) * n;
  EXPECT_EQ(splittingInvariantCore(s, scaleA(s, constantScaling(*a1, c), a), constantScaling(*a1, KElem::one(N)))[1],
            want);
}

TEST(SplittingInvariant, A2RotationOrderThree) {
  auto a2 = buildFromLabel("A2", Isogeny::SimplyConnected);
  const auto w = WeylElem::fromWord(a2, {0, 1});
  const auto s = TwistedTorusDatum::cyclic(a2, CoeffAction::trivial(FiniteGroup::cyclic(3), N), w,
                                           PinnedAutomorphism::identity(a2));
  std::mt19937_64 rng(3);
  const AData a = randomAData(s, rng, {});
  ASSERT_FALSE(validateAData(s, a));
  const auto core = splittingInvariantCore(s, a, constantScaling(*a2, KElem::one(N)));
  ASSERT_EQ(core.size(), 3u);
  for (std::size_t g = 0; g < 3; ++g) EXPECT_EQ(core[g].weylPart(), s.weylImage(g));
  EXPECT_TRUE(core[0].torusPart().isIdentity());
  EXPECT_TRUE(verifySplcng(s, a, randomScaling(s, rng, {})).holds);
}

TEST(SplittingInvariant, RandomInstances) {
  std::size_t k = 0;
  for (const char* t : {"A2", "A3", "B2", "C2"})
    for (std::size_t order : {2u, 3u}) {
      auto d = buildFromLabel(t, Isogeny::SimplyConnected);
      for (std::uint64_t seed = 0; seed < 3; ++seed, ++k) {
        const auto inst = randomSplcngInstance(d, order, 500 + k, N);
        const auto r = verifySplcng(inst.torus, inst.a, inst.c);
        EXPECT_TRUE(r.holds) << inst.describe().dump();
        const auto core = splittingInvariantCore(inst.torus, inst.a, inst.c);
        for (std::size_t g = 0; g < core.size(); ++g) EXPECT_EQ(core[g].weylPart(), inst.torus.weylImage(g));
      }
    }
}

TEST(SplittingInvariant, InstancesAreDeterministic) {
  auto d = buildFromLabel("B2", Isogeny::SimplyConnected);
  EXPECT_EQ(randomSplcngInstance(d, 2, 42, N).describe(), randomSplcngInstance(d, 2, 42, N).describe());
}

}  // namespace
}  // namespace lgk
