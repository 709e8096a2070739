#include <gtest/gtest.h>

#include "lgk/chevalley.hpp"
#include "lgk/chidata.hpp"
#include "lgk/models.hpp"
#include "lgk/tits.hpp"

namespace lgk {
namespace {

constexpr Int N = 24;

TEST(Tits, IdentityAndGeneratorSquare) {
  auto a1 = buildFromType("A", 1, Isogeny::SimplyConnected);
  EXPECT_EQ(titsSection(WeylElem::identity(a1), N), ExtWeylElem::identity(a1, N));
  const auto n = titsSection(WeylElem::reflection(a1, 0), N);
  EXPECT_EQ(n * n, ExtWeylElem::torus(evalCocharacter(a1, a1->coroot(0), KElem::minusOne(N))));
}

TEST(Tits, BraidRelationA2) {
  auto a2 = buildFromType("A", 2, Isogeny::SimplyConnected);
  EXPECT_EQ(wordProduct(a2, {0, 1, 0}, N), wordProduct(a2, {1, 0, 1}, N));
  const auto m = MatrixModel::realize(a2, N);
  EXPECT_TRUE(m.sameElement(m.wordMatrix({0, 1, 0}), m.wordMatrix({1, 0, 1})));
}

TEST(Tits, ReducedWordIndependenceAndLengthAdditivity) {
  for (const char* t : {"A3", "B2", "C3", "G2"}) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    const auto group = enumerateWeylGroup(d);
    for (const auto& w : group)
      for (const auto& word : reducedWords(w)) EXPECT_EQ(wordProduct(d, word, N), titsSection(w, N)) << t;
    for (const auto& a : group)
      for (const auto& b : group)
        if ((a * b).length() == a.length() + b.length())
          EXPECT_EQ(titsSection(a, N) * titsSection(b, N), titsSection(a * b, N));
  }
}

TEST(Tits, RescaledSection) {
  auto a2 = buildFromType("A", 2, Isogeny::SimplyConnected);
  const auto w0 = longestElement(a2);
  EXPECT_EQ(rescaledSection(constantScaling(*a2, KElem::one(N)), w0, N), titsSection(w0, N));

  auto a1 = buildFromType("A", 1, Isogeny::SimplyConnected);
  const KElem c = KElem::symbol(N, "c");
  const RootScalars cs{c, c};
  const auto s = WeylElem::reflection(a1, 0);
  EXPECT_EQ(rescaledSection(cs, s, N),
            ExtWeylElem::torus(evalCocharacter(a1, a1->coroot(0), c)) * titsSection(s, N));

  RootScalars scal;
  for (std::size_t a = 0; a < a2->numRoots(); ++a) scal.push_back(KElem::symbol(N, "c"));
  EXPECT_EQ(rescaledSection(scal, w0, N), rescaledSectionStepwise(scal, w0, N));
}

TEST(Tits, InverseSectionIdentity) {
  auto a1 = buildFromType("A", 1, Isogeny::SimplyConnected);
  EXPECT_TRUE(inverseSectionIdentityCheck(WeylElem::identity(a1), KElem::i(N)).holds);
  EXPECT_TRUE(inverseSectionIdentityCheck(WeylElem::reflection(a1, 0), KElem::i(N)).holds);
  auto b2 = buildFromType("B", 2, Isogeny::SimplyConnected);
  const auto m = MatrixModel::realize(b2, N);
  for (const auto& w : enumerateWeylGroup(b2))
    for (const KElem& root : {KElem::i(N), KElem::i(N).inverse()}) {
      const auto r = inverseSectionIdentityCheck(w, root);
      EXPECT_TRUE(r.holds);
      EXPECT_TRUE(m.sameElement(m.embedExt(r.lhs), m.embedExt(r.rhs)));
    }
}

TEST(Tits, InversionConventions) {
  auto a2 = buildFromType("A", 2, Isogeny::SimplyConnected);
  const auto w = WeylElem::fromWord(a2, {0, 1});
  EXPECT_EQ(convolutionIndexSet(w, InversionConvention::Literal), w.inversionSet());
  EXPECT_EQ(convolutionIndexSet(w, InversionConvention::InverseInversionSet), w.inverse().inversionSet());
}

}  // namespace
}  // namespace lgk
