#include <gtest/gtest.h>

#include "lgk/error.hpp"
#include "lgk/rootdatum.hpp"

namespace lgk {
namespace {

const std::vector<std::pair<std::string, int>> kTypes{{"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2}, {"B", 3},
                                                     {"C", 2}, {"C", 3}, {"D", 4}, {"G", 2}};

TEST(RootDatum, A1SimplyConnected) {
  auto d = buildFromType("A", 1, Isogeny::SimplyConnected);
  EXPECT_EQ(d->rank(), 1u);
  EXPECT_EQ(d->numRoots(), 2u);
  EXPECT_EQ(d->root(0), IntVec{2});
  EXPECT_EQ(dot(d->root(0), d->coroot(0)), 2);
}

TEST(RootDatum, B2AdjointCartan) {
  auto d = buildFromType("B", 2, Isogeny::Adjoint);
  EXPECT_EQ(d->numRoots(), 8u);
  EXPECT_EQ(d->cartanMatrix(), IntMatrix(2, 2, {2, -2, -1, 2}));
}

TEST(RootDatum, G2HasTwelveRoots) { EXPECT_EQ(buildFromType("G", 2, Isogeny::SimplyConnected)->numRoots(), 12u); }

TEST(RootDatum, UnknownTypeThrows) {
  EXPECT_THROW(buildFromType("Q", 2, Isogeny::SimplyConnected), Error);
  EXPECT_THROW(buildFromType("D", 2, Isogeny::SimplyConnected), Error);
  EXPECT_THROW(buildFromLabel("A", Isogeny::Adjoint), Error);
}

TEST(RootDatum, DualSwapsTypesAndIsogeny) {
  auto b2 = dual(*buildFromType("B", 2, Isogeny::SimplyConnected));
  EXPECT_EQ(b2->family(), "C");
  EXPECT_EQ(b2->isogeny(), Isogeny::Adjoint);
  EXPECT_EQ(*b2, *buildFromType("C", 2, Isogeny::Adjoint));
  EXPECT_EQ(*dual(*buildFromType("A", 1, Isogeny::SimplyConnected)), *buildFromType("A", 1, Isogeny::Adjoint));
}

TEST(RootDatum, DualIsInvolution) {
  for (const auto& [f, r] : kTypes)
    for (auto iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      auto d = buildFromType(f, r, iso);
      EXPECT_EQ(*dual(*dual(*d)), *d) << f << r;
    }
}

TEST(RootDatum, RhoCheckDouble) {
  EXPECT_EQ(rhoCheckDouble(*buildFromType("A", 1, Isogeny::SimplyConnected)),
            buildFromType("A", 1, Isogeny::SimplyConnected)->coroot(0));
  auto a2 = buildFromType("A", 2, Isogeny::SimplyConnected);
  EXPECT_EQ(rhoCheckDouble(*a2), 2 * (a2->coroot(0) + a2->coroot(1)));
  auto b2 = buildFromType("B", 2, Isogeny::Adjoint);
  IntVec sum(b2->rank(), 0);
  for (std::size_t i = 0; i < b2->numPositive(); ++i) sum = sum + b2->coroot(i);
  EXPECT_EQ(b2->numPositive(), 4u);
  EXPECT_EQ(rhoCheckDouble(*b2), sum);
}

TEST(RootDatum, ReflectionsPermuteRootsAndCoroots) {
  for (const auto& [f, r] : kTypes)
    for (auto iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      auto d = buildFromType(f, r, iso);
      ASSERT_FALSE(d->validate()) << *d->validate();
      for (std::size_t a = 0; a < d->numRoots(); ++a)
        for (std::size_t b = 0; b < d->numRoots(); ++b) {
          const Int p = dot(d->root(b), d->coroot(a));
          const auto img = d->rootIndex(d->root(b) - p * d->root(a));
          ASSERT_TRUE(img);
          EXPECT_EQ(d->coroot(*img), d->coroot(b) - dot(d->root(a), d->coroot(b)) * d->coroot(a));
        }
    }
}

TEST(RootDatum, PinnedAutomorphismsPreservePairing) {
  for (const auto& [f, r] : kTypes) {
    auto d = buildFromType(f, r, Isogeny::SimplyConnected);
    for (const auto& p : diagramAutomorphisms(*d)) {
      auto th = PinnedAutomorphism::fromPermutation(d, p);
      for (std::size_t a = 0; a < d->numRoots(); ++a)
        for (std::size_t b = 0; b < d->numRoots(); ++b)
          EXPECT_EQ(dot(th.applyChar(d->root(a)), th.applyCochar(d->coroot(b))), dot(d->root(a), d->coroot(b)));
    }
  }
  EXPECT_EQ(diagramAutomorphisms(*buildFromType("D", 4, Isogeny::SimplyConnected)).size(), 6u);
  EXPECT_EQ(diagramAutomorphisms(*buildFromType("A", 3, Isogeny::Adjoint)).size(), 2u);
}

TEST(RootDatum, NonAutomorphismRejected) {
  auto b2 = buildFromType("B", 2, Isogeny::SimplyConnected);
  EXPECT_THROW(PinnedAutomorphism::fromPermutation(b2, {1, 0}), Error);
}

TEST(RootDatum, JsonRoundTrip) {
  for (const auto& [f, r] : kTypes) {
    auto d = buildFromType(f, r, Isogeny::Adjoint);
    EXPECT_EQ(*datumFromJson(toJson(*d)), *d);
  }
}

TEST(RootDatum, IdentifiesCartanType) {
  EXPECT_EQ(identifyCartanType(cartanMatrixOfType("C", 3)), "C3");
  EXPECT_EQ(identifyCartanType(cartanMatrixOfType("G", 2)), "G2");
}

}  // namespace
}  // namespace lgk
