#include <gtest/gtest.h>

#include <set>

#include "lgk/weyl.hpp"

namespace lgk {
namespace {

TEST(Weyl, A2Basics) {
  auto d = buildFromType("A", 2, Isogeny::SimplyConnected);
  auto s1 = WeylElem::reflection(d, 0), s2 = WeylElem::reflection(d, 1);
  EXPECT_TRUE((s1 * s1).isIdentity());
  EXPECT_EQ(enumerateWeylGroup(d).size(), 6u);
  EXPECT_EQ((s1 * s2).inverse(), s2 * s1);
  EXPECT_EQ((s1 * s2).inverse().word(), (Word{1, 0}));
}

TEST(Weyl, InversionSets) {
  auto a2 = buildFromType("A", 2, Isogeny::SimplyConnected);
  EXPECT_EQ(WeylElem::reflection(a2, 0).inversionSet(), std::vector<std::size_t>{0});
  EXPECT_EQ(longestElement(a2).inversionSet().size(), 3u);
  auto b2 = buildFromType("B", 2, Isogeny::SimplyConnected);
  EXPECT_EQ(WeylElem::fromWord(b2, {0, 1}).inversionSet().size(), 2u);
}

TEST(Weyl, LongestElements) {
  auto a1 = buildFromType("A", 1, Isogeny::SimplyConnected);
  EXPECT_EQ(longestElement(a1), WeylElem::reflection(a1, 0));
  auto a2 = buildFromType("A", 2, Isogeny::SimplyConnected);
  EXPECT_EQ(longestElement(a2).word(), (Word{0, 1, 0}));
  auto c2 = buildFromType("C", 2, Isogeny::Adjoint);
  const auto w0 = longestElement(c2);
  EXPECT_EQ(w0.length(), 4u);
  EXPECT_EQ(w0.charMatrix(), (IntMatrix(2, 2) - IntMatrix::identity(2)));
}

TEST(Weyl, LengthIsInversionCount) {
  for (const char* t : {"A3", "B2", "C3", "G2"}) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    for (const auto& w : enumerateWeylGroup(d)) {
      std::size_t neg = 0;
      for (std::size_t a = 0; a < d->numPositive(); ++a)
        if (!d->isPositive(w.actRoot(a))) ++neg;
      EXPECT_EQ(w.length(), neg);
      EXPECT_EQ(w.inversionSet().size(), neg);
    }
  }
}

TEST(Weyl, GroupOrders) {
  EXPECT_EQ(enumerateWeylGroup(buildFromLabel("A3", Isogeny::Adjoint)).size(), 24u);
  EXPECT_EQ(enumerateWeylGroup(buildFromLabel("B3", Isogeny::Adjoint)).size(), 48u);
  EXPECT_EQ(enumerateWeylGroup(buildFromLabel("G2", Isogeny::Adjoint)).size(), 12u);
  EXPECT_EQ(enumerateWeylGroup(buildFromLabel("D4", Isogeny::Adjoint)).size(), 192u);
}

TEST(Weyl, CanonicalWordIsLeastReducedWord) {
  auto d = buildFromLabel("B2", Isogeny::SimplyConnected);
  for (const auto& w : enumerateWeylGroup(d)) {
    const auto words = reducedWords(w);
    ASSERT_FALSE(words.empty());
    EXPECT_EQ(*std::min_element(words.begin(), words.end()), w.word());
    for (const auto& x : words) EXPECT_EQ(WeylElem::fromWord(d, x), w);
  }
}

TEST(Weyl, ReducedWordCountForA2LongestElement) {
  EXPECT_EQ(reducedWords(longestElement(buildFromLabel("A2", Isogeny::Adjoint))).size(), 2u);
}

}  // namespace
}  // namespace lgk
