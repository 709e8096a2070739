#include <gtest/gtest.h>

#include "lgk/error.hpp"
#include "lgk/models.hpp"

namespace lgk {
namespace {

constexpr Int N = 24;

FieldMatrix mat(const FieldPtr& f, std::size_t n, std::vector<long> v) {
  FieldMatrix m(f, n, n);
  for (std::size_t k = 0; k < v.size(); ++k) m(k / n, k % n) = Cyc(f, mpq_class(v[k]));
  return m;
}

TEST(Models, SL2StandardTriple) {
  const auto m = MatrixModel::realize(buildFromType("A", 1, Isogeny::SimplyConnected), N);
  ASSERT_EQ(m.dim(), 2u);
  EXPECT_EQ(m.X(0), mat(m.field(), 2, {0, 1, 0, 0}));
  EXPECT_EQ(m.Y(0), mat(m.field(), 2, {0, 0, 1, 0}));
  EXPECT_EQ(m.H(0), mat(m.field(), 2, {1, 0, 0, -1}));
  EXPECT_EQ(m.n(0), mat(m.field(), 2, {0, 1, -1, 0}));
}

TEST(Models, PinningBrackets) {
  for (const char* t : {"A3", "B2", "C2", "C3", "D4", "B3"}) {
    const auto m = MatrixModel::realize(buildFromLabel(t, Isogeny::SimplyConnected), N);
    for (std::size_t i = 0; i < m.datum()->semisimpleRank(); ++i) {
      EXPECT_EQ(commutator(m.X(i), m.Y(i)), m.H(i)) << t;
      EXPECT_TRUE(m.inLieAlgebra(m.X(i)) && m.inLieAlgebra(m.Y(i)));
    }
  }
}

TEST(Models, EmbedExt) {
  auto a1 = buildFromType("A", 1, Isogeny::SimplyConnected);
  const auto m = MatrixModel::realize(a1, N);
  const auto id = FieldMatrix::identity(m.field(), 2);
  EXPECT_EQ(m.embedExt(ExtWeylElem::identity(a1, N)), id);
  EXPECT_EQ(m.embedExt(ExtWeylElem::torus(evalCocharacter(a1, a1->coroot(0), KElem::minusOne(N)))),
            id * Cyc(m.field(), -1));

  auto a2 = buildFromType("A", 2, Isogeny::SimplyConnected);
  const auto m3 = MatrixModel::realize(a2, N);
  const FieldMatrix w0 = m3.embedExt(titsSection(longestElement(a2), N));
  // the antidiagonal permutation of size 3 is odd
  EXPECT_EQ(-(w0(0, 2) * w0(1, 1) * w0(2, 0)), Cyc(m3.field(), 1));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const Cyc& x = w0(r, c);
      if (r + c == 2)
        EXPECT_TRUE(x == Cyc(m3.field(), 1) || x == Cyc(m3.field(), -1));
      else
        EXPECT_TRUE(x.isZero());
    }
  EXPECT_TRUE(m3.sameElement(w0, m3.wordMatrix({0, 1, 0})));
}

TEST(Models, GeneratorSquaresAreCorootsOfMinusOne) {
  for (const char* t : {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "D4"})
    for (auto iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      auto d = buildFromLabel(t, iso);
      std::optional<MatrixModel> m;
      try {
        m = MatrixModel::realize(d, N);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidType);
        continue;
      }
      for (std::size_t i = 0; i < d->semisimpleRank(); ++i)
        EXPECT_TRUE(m->sameElement(m->n(i) * m->n(i),
                                   m->torusMatrix(evalCocharacter(d, d->coroot(i), KElem::minusOne(N)))))
            << t << " " << to_string(iso);
    }
}

TEST(Models, G2HasNoModel) {
  try {
    MatrixModel::realize(buildFromLabel("G2", Isogeny::SimplyConnected), N);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidType);
  }
}

TEST(Models, TitsSectionMatchesMatrices) {
  for (const char* t : {"A1", "A2", "A3", "B2", "C2"}) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    const auto m = MatrixModel::realize(d, N);
    for (const auto& w : enumerateWeylGroup(d)) {
      const auto e = titsSection(w, N);
      EXPECT_TRUE(m.sameElement(m.embedExt(e), m.weylMatrix(w)));
      EXPECT_TRUE(m.preservesForm(m.embedExt(e)));
    }
  }
}

}  // namespace
}  // namespace lgk
