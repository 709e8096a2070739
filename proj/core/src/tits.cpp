#include "lgk/tits.hpp"

#include "lgk/error.hpp"

namespace lgk {

ExtWeylElem::ExtWeylElem(TorusPoint t, WeylElem w) : t_(std::move(t)), w_(std::move(w)) {
  requireSameDatum(t_.datum(), w_.datum());
}

ExtWeylElem ExtWeylElem::identity(const DatumPtr& d, Int n) {
  return ExtWeylElem(TorusPoint::identity(d, n), WeylElem::identity(d));
}

ExtWeylElem ExtWeylElem::torus(TorusPoint t) {
  WeylElem e = WeylElem::identity(t.datum());
  return ExtWeylElem(std::move(t), std::move(e));
}

ExtWeylElem ExtWeylElem::generator(const DatumPtr& d, std::size_t i, Int n) {
  return ExtWeylElem(TorusPoint::identity(d, n), WeylElem::reflection(d, i));
}

ExtWeylElem ExtWeylElem::operator*(const ExtWeylElem& o) const {
  requireSameDatum(datum(), o.datum());
  const DatumPtr& d = datum();
  const Int n = modulus();
  TorusPoint t = t_ * o.t_.weylAct(w_);
  WeylElem w = w_;
  const KElem minusOne = KElem::minusOne(n);
  for (std::size_t i : o.w_.word()) {
    const WeylElem s = WeylElem::reflection(d, i);
    if (!w.hasRightDescent(i)) {
      w = w * s;
    } else {
      w = w * s;
      t = t * evalCocharacter(d, d->coroot(i), minusOne).weylAct(w);
    }
  }
  return ExtWeylElem(std::move(t), std::move(w));
}

ExtWeylElem ExtWeylElem::inverse() const {
  const WeylElem winv = w_.inverse();
  const ExtWeylElem prod = titsSection(w_, modulus()) * titsSection(winv, modulus());
  if (!prod.w_.isIdentity()) throw Error(ErrorCode::InvalidData, "section product is not central");
  const TorusPoint tau = prod.t_;
  return ExtWeylElem(t_.inverse().weylAct(winv) * tau.inverse().weylAct(winv), winv);
}

ExtWeylElem titsSection(const WeylElem& w, Int n) { return ExtWeylElem(TorusPoint::identity(w.datum(), n), w); }

ExtWeylElem wordProduct(const DatumPtr& d, const Word& word, Int n) {
  ExtWeylElem x = ExtWeylElem::identity(d, n);
  for (std::size_t i : word) x = x * ExtWeylElem::generator(d, i, n);
  return x;
}

std::vector<std::size_t> convolutionIndexSet(const WeylElem& w, InversionConvention conv) {
  return conv == InversionConvention::Literal ? w.inversionSet() : w.inverse().inversionSet();
}

void requireWeylInvariant(const BasedRootDatum& d, const RootScalars& c) {
  if (c.size() != d.numRoots()) throw Error(ErrorCode::InvalidScaling, "scaling vector must cover every root");
  for (std::size_t i = 0; i < d.semisimpleRank(); ++i)
    for (std::size_t a = 0; a < d.numRoots(); ++a) {
      auto b = d.rootIndex(d.reflectChar(i, d.root(a)));
      if (c[*b] != c[a])
        throw Error(ErrorCode::InvalidScaling, "scaling vector is not Weyl-invariant at root " + std::to_string(a));
    }
}

ExtWeylElem rescaledSection(const RootScalars& c, const WeylElem& w, Int n, InversionConvention conv) {
  const DatumPtr& d = w.datum();
  requireWeylInvariant(*d, c);
  TorusPoint t = TorusPoint::identity(d, n);
  for (std::size_t b : convolutionIndexSet(w, conv)) t = t * evalCocharacter(d, d->coroot(b), c[b]);
  return ExtWeylElem(std::move(t), w);
}

ExtWeylElem rescaledSectionStepwise(const RootScalars& c, const WeylElem& w, Int n) {
  const DatumPtr& d = w.datum();
  requireWeylInvariant(*d, c);
  ExtWeylElem x = ExtWeylElem::identity(d, n);
  for (std::size_t i : w.word())
    x = x * ExtWeylElem::torus(evalCocharacter(d, d->coroot(i), c[i])) * ExtWeylElem::generator(d, i, n);
  return x;
}

TorusPoint tPoint(const DatumPtr& d, const KElem& x) { return evalCocharacter(d, rhoCheckDouble(*d), x); }

InverseSectionResult inverseSectionIdentityCheck(const WeylElem& w, const KElem& root) {
  const Int n = root.modulus();
  const TorusPoint t = tPoint(w.datum(), root);
  InverseSectionResult r;
  r.lhs = titsSection(w.inverse(), n).inverse();
  r.rhs = ExtWeylElem(t * t.weylAct(w).inverse(), w);
  r.holds = r.lhs == r.rhs;
  return r;
}

nlohmann::json toJson(const ExtWeylElem& e) {
  return {{"torus", toJson(e.torusPart())}, {"word", wordToJson(e.weylPart().word())}};
}

}  // namespace lgk
