#include <gtest/gtest.h>

#include "lgk/error.hpp"
#include "lgk/torus.hpp"

namespace lgk {
namespace {

constexpr Int N = 24;

TEST(KElem, RootsOfUnity) {
  EXPECT_EQ(KElem::minusOne(N).zeta(), 12);
  EXPECT_EQ(KElem::i(N) * KElem::i(N), KElem::minusOne(N));
  EXPECT_EQ(KElem::i(N).order(), 4);
  EXPECT_THROW(KElem::i(6), Error);
  const KElem x = KElem::symbol(N, "x");
  EXPECT_TRUE((x * x.inverse()).isOne());
  EXPECT_EQ(kelemFromJson(toJson(x.pow(3) * KElem(N, 5)), N), x.pow(3) * KElem(N, 5));
}

TEST(Torus, EvalCocharacter) {
  auto a1 = buildFromType("A", 1, Isogeny::SimplyConnected);
  EXPECT_EQ(evalCocharacter(a1, a1->coroot(0), KElem::minusOne(N)).coords(), std::vector<KElem>{KElem::minusOne(N)});
  const KElem x = KElem::symbol(N, "x");
  EXPECT_TRUE(evalCocharacter(a1, IntVec{0}, x).isIdentity());
  auto a2 = buildFromType("A", 2, Isogeny::Adjoint);
  EXPECT_EQ(evalCocharacter(a2, a2->coroot(0) + a2->coroot(1), x),
            evalCocharacter(a2, a2->coroot(0), x) * evalCocharacter(a2, a2->coroot(1), x));
}

TEST(Torus, EvalRoot) {
  const KElem x = KElem::symbol(N, "x");
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    for (std::size_t a = 0; a < d->numRoots(); ++a) {
      EXPECT_EQ(evalRoot(d->root(a), evalCocharacter(d, d->coroot(a), x)), x.pow(2));
      EXPECT_TRUE(evalRoot(d->root(a), TorusPoint::identity(d, N)).isOne());
    }
  }
  auto a2 = buildFromType("A", 2, Isogeny::SimplyConnected);
  EXPECT_EQ(evalRoot(a2->root(0), evalCocharacter(a2, a2->coroot(1), x)), x.inverse());
}

TEST(Torus, GaloisAction) {
  auto a1 = buildFromType("A", 1, Isogeny::SimplyConnected);
  const TorusPoint p(a1, {KElem::symbol(N, "x")});
  const auto trivial = CoeffAction::trivial(FiniteGroup::cyclic(2), N);
  EXPECT_EQ(galoisAct(trivial, 0, p, WeylElem::identity(a1)), p);
  const auto s = WeylElem::reflection(a1, 0);
  EXPECT_EQ(galoisAct(trivial, 1, p, s), p.inverse());

  std::vector<std::map<std::string, KElem>> images{{}, {{"x", KElem::symbol(N, "x").inverse()}}};
  const CoeffAction flip(FiniteGroup::cyclic(2), N, {1, 13}, images);
  ASSERT_FALSE(flip.validate({"x"}));
  const TorusPoint q(a1, {KElem::symbol(N, "x") * KElem(N, 5)});
  EXPECT_EQ(galoisAct(flip, 1, galoisAct(flip, 1, q, s), s), q);
}

TEST(Torus, CoeffActionValidation) {
  std::vector<std::map<std::string, KElem>> images{{}, {{"x", KElem::symbol(N, "x", 2)}}};
  const CoeffAction notAction(FiniteGroup::cyclic(2), N, {1, 1}, images);
  EXPECT_TRUE(notAction.validate({"x"}).has_value());
}

TEST(FiniteGroup, Cyclic) {
  const auto g = FiniteGroup::cyclic(6);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.mul(4, 5), 3u);
  EXPECT_EQ(g.inverse(2), 4u);
  EXPECT_EQ(g.elementOrder(4), 3u);
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}), Error);
}

}  // namespace
}  // namespace lgk
