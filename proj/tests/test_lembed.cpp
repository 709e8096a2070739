#include <gtest/gtest.h>

#include "lgk/error.hpp"
#include "lgk/lembed.hpp"

namespace lgk {
namespace {

constexpr Int N = 24;

TwistedTorusDatum reflectionTwist(const DatumPtr& d) {
  return TwistedTorusDatum::cyclic(d, CoeffAction::trivial(FiniteGroup::cyclic(2), N), WeylElem::reflection(d, 0),
                                   PinnedAutomorphism::identity(d));
}

TEST(LEmbedding, TrivialGroup) {
  auto d = buildFromLabel("B2", Isogeny::Adjoint);
  const auto s = TwistedTorusDatum::split(d, N);
  const auto e = buildLEmbedding(s, trivialRCochain(s));
  const TorusPoint p(d, {KElem::symbol(N, "a"), KElem::symbol(N, "b")});
  EXPECT_EQ(e(p, 0), (LElement{ExtWeylElem::torus(p), 0}));
}

TEST(LEmbedding, TrivialGroupChiInvAllTypes) {
  for (const char* t : {"A1", "A2", "A3", "B2", "C2", "B3", "C3"})
    for (auto iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      auto d = buildFromLabel(t, iso);
      const auto s = TwistedTorusDatum::split(d, N);
      const auto r = trivialRCochain(s);
      const auto res = verifyChiInv(buildChevalley(d, N), buildLEmbedding(s, r), buildLEmbedding(s, negateRCochain(r)));
      EXPECT_TRUE(res.holds) << t << res.toJson().dump();
    }
}

TEST(LEmbedding, A1SimplyConnectedReflectionHasNoCochain) {
  auto d = buildFromLabel("A1", Isogeny::SimplyConnected);
  const auto s = reflectionTwist(d);
  EXPECT_THROW(buildLEmbedding(s, trivialRCochain(s)), Error);
  EXPECT_TRUE(searchRCochains(s, 4).empty());
}

TEST(LEmbedding, A1AdjointReflection) {
  auto d = buildFromLabel("A1", Isogeny::Adjoint);
  const auto s = reflectionTwist(d);
  EXPECT_NO_THROW(buildLEmbedding(s, trivialRCochain(s)));
  RCochain r = trivialRCochain(s);
  r.values[1] = TorusPoint(d, {KElem::minusOne(N)});
  EXPECT_FALSE(rcochainDefect(s, r));
  EXPECT_NO_THROW(buildLEmbedding(s, r));

  const auto c = buildChevalley(d, N);
  const auto all = searchRCochains(s, 4);
  EXPECT_FALSE(all.empty());
  for (const auto& x : all) {
    const auto res = verifyChiInv(c, buildLEmbedding(s, x), buildLEmbedding(s, negateRCochain(x)));
    EXPECT_TRUE(res.holds) << res.toJson().dump();
    EXPECT_TRUE(res.matrixChecked);
  }
}

TEST(LEmbedding, NegatedCochainIsCochain) {
  auto d = buildFromLabel("A2", Isogeny::Adjoint);
  for (const auto& s : cyclicTwists(d, 2, N))
    for (const auto& r : searchRCochains(s, 4)) {
      EXPECT_FALSE(rcochainDefect(s, negateRCochain(r)));
      break;
    }
}

TEST(LEmbedding, A2FlipTwist) {
  auto d = buildFromLabel("A2", Isogeny::Adjoint);
  const auto c = buildChevalley(d, N);
  const auto flip = PinnedAutomorphism::fromPermutation(d, {1, 0});
  const auto s = TwistedTorusDatum::cyclic(d, CoeffAction::trivial(FiniteGroup::cyclic(2), N),
                                           WeylElem::identity(d), flip);
  const auto all = searchRCochains(s, 4);
  ASSERT_FALSE(all.empty());
  bool sawOrderFour = false;
  for (const auto& r : all) {
    for (const auto& k : r.values[1].coords()) sawOrderFour |= k.order() == 4;
    const auto res = verifyChiInv(c, buildLEmbedding(s, r), buildLEmbedding(s, negateRCochain(r)));
    EXPECT_TRUE(res.holds && res.matrixChecked) << res.toJson().dump();
  }
  EXPECT_TRUE(sawOrderFour);
}

TEST(LEmbedding, MinusOneOnLS) {
  auto d = buildFromLabel("A1", Isogeny::Adjoint);
  const TorusPoint p(d, {KElem::symbol(N, "a")});
  const auto [q, w] = minusOneOnLS(p, 1);
  EXPECT_EQ(q, p.inverse());
  EXPECT_EQ(w, 1u);
}

TEST(LEmbedding, WrongLengthCochain) {
  auto d = buildFromLabel("A1", Isogeny::Adjoint);
  const auto s = reflectionTwist(d);
  EXPECT_THROW(buildLEmbedding(s, RCochain{{TorusPoint::identity(d, N)}, ""}), Error);
}

}  // namespace
}  // namespace lgk
