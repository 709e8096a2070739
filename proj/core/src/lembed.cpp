#include "lgk/lembed.hpp"

#include "lgk/error.hpp"

namespace lgk {

namespace {

TorusPoint latticeAct(const TwistedTorusDatum& s, std::size_t g, const TorusPoint& t) {
  return t.mapCochar(s.weylImage(g).cocharMatrix() * s.diagramImage(g).cocharMap());
}

TorusPoint symbolicPoint(const DatumPtr& d, Int n, const std::string& prefix) {
  std::vector<KElem> c;
  for (std::size_t k = 0; k < d->rank(); ++k) c.push_back(KElem::symbol(n, prefix + std::to_string(k + 1)));
  return TorusPoint(d, std::move(c));
}

nlohmann::json inputJson(const TorusPoint& p, std::size_t w) { return {{"s", toJson(p)}, {"w", w}}; }

}  // namespace

ExtWeylElem pinnedAct(const PinnedAutomorphism& theta, const ExtWeylElem& x) {
  requireSameDatum(theta.datum(), x.datum());
  return ExtWeylElem(x.torusPart().mapCochar(theta.cocharMap()), conjugateByDiagram(theta, x.weylPart()));
}

LElement lgroupMul(const TwistedTorusDatum& s, const LElement& a, const LElement& b) {
  return {a.g * pinnedAct(s.diagramImage(a.sigma), b.g), s.group().mul(a.sigma, b.sigma)};
}

RCochain trivialRCochain(const TwistedTorusDatum& s) {
  return {std::vector<TorusPoint>(s.group().order(), TorusPoint::identity(s.datum(), s.modulus())), "trivial"};
}

RCochain negateRCochain(const RCochain& r) {
  RCochain out{{}, r.label.empty() ? "" : "-(" + r.label + ")"};
  for (const auto& v : r.values) out.values.push_back(v.inverse());
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> rcochainDefect(const TwistedTorusDatum& s, const RCochain& r) {
  const std::size_t k = s.group().order();
  if (r.values.size() != k) throw Error(ErrorCode::InvalidRCochain, "cochain needs one value per group element");
  const Int n = s.modulus();
  std::vector<ExtWeylElem> img;
  for (std::size_t w = 0; w < k; ++w) img.push_back(ExtWeylElem::torus(r.values[w]) * titsSection(s.weylImage(w), n));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (!(img[a] * pinnedAct(s.diagramImage(a), img[b]) == img[s.group().mul(a, b)])) return std::pair{a, b};
  return std::nullopt;
}

std::vector<RCochain> searchRCochains(const TwistedTorusDatum& s, Int orderBound) {
  const Int n = s.modulus();
  Int level = 1;
  for (Int k = 1; k <= orderBound; ++k) level = lcm(level, k);
  if (n % level != 0) throw Error(ErrorCode::InvalidData, "coefficient modulus does not contain the search level");
  const DatumPtr& d = s.datum();
  const std::size_t r = d->rank();

  std::vector<TorusPoint> points;
  std::vector<Int> e(r, 0);
  for (;;) {
    Int ord = 1;
    std::vector<KElem> c;
    for (Int x : e) {
      c.emplace_back(n, x * (n / level));
      ord = lcm(ord, c.back().order());
    }
    if (ord <= orderBound) points.emplace_back(d, std::move(c));
    std::size_t j = r;
    while (j > 0 && ++e[j - 1] == level) e[--j] = 0;
    if (j == 0) break;
  }

  const std::size_t k = s.group().order();
  std::vector<RCochain> out;
  std::vector<std::size_t> idx(k, 0);
  RCochain cur = trivialRCochain(s);
  for (;;) {
    for (std::size_t w = 1; w < k; ++w) cur.values[w] = points[idx[w]];
    if (!rcochainDefect(s, cur)) {
      cur.label = "search#" + std::to_string(out.size());
      out.push_back(cur);
    }
    std::size_t j = k;
    while (j > 1 && ++idx[j - 1] == points.size()) idx[--j] = 0;
    if (j <= 1) break;
  }
  return out;
}

LElement LEmbedding::operator()(const TorusPoint& t, std::size_t w) const {
  return {ExtWeylElem::torus(t * r_.values.at(w)) * titsSection(s_.weylImage(w), s_.modulus()), w};
}

LEmbedding buildLEmbedding(const TwistedTorusDatum& s, const RCochain& r) {
  if (r.values.size() != s.group().order())
    throw Error(ErrorCode::InvalidRCochain, "cochain needs one value per group element");
  LEmbedding e;
  e.s_ = s;
  e.r_ = r;
  const TorusPoint p = symbolicPoint(s.datum(), s.modulus(), "p");
  const TorusPoint q = symbolicPoint(s.datum(), s.modulus(), "q");
  for (std::size_t a = 0; a < s.group().order(); ++a)
    for (std::size_t b = 0; b < s.group().order(); ++b) {
      const LElement lhs = lgroupMul(s, e(p, a), e(q, b));
      const LElement rhs = e(p * latticeAct(s, a, q), s.group().mul(a, b));
      if (!(lhs == rhs))
        throw Error(ErrorCode::InvalidRCochain,
                    "not a homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  return e;
}

std::pair<TorusPoint, std::size_t> minusOneOnLS(const TorusPoint& s, std::size_t w) { return {s.inverse(), w}; }

nlohmann::json ChiInvResult::toJson() const {
  nlohmann::json j{{"holds", holds}, {"matrixChecked", matrixChecked}, {"inputs", inputs}};
  if (!witness.empty()) j["witness"] = nlohmann::json::parse(witness);
  return j;
}

ChiInvResult verifyChiInv(const ChevalleyInvolution& c, const LEmbedding& embX, const LEmbedding& embNegX) {
  const DatumPtr& d = c.datum();
  const TwistedTorusDatum& s = embX.torus();
  requireSameDatum(s.datum(), d);
  requireSameDatum(embNegX.torus().datum(), d);
  const Int n = s.modulus();
  const ExtWeylElem t = tElement(d, n);
  const ExtWeylElem tInv = t.inverse();

  std::vector<TorusPoint> points{symbolicPoint(d, n, "s")};
  for (std::size_t k = 0; k < d->rank(); ++k) {
    IntVec e(d->rank(), 0);
    e[k] = 1;
    points.push_back(evalCocharacter(d, e, KElem(n, 1)));
  }

  ChiInvResult res;
  auto rhsOf = [&](const TorusPoint& p, std::size_t w) {
    const auto [q, v] = minusOneOnLS(p, w);
    return lgroupMul(s, lgroupMul(s, {t, 0}, embNegX(q, v)), {tInv, 0});
  };
  for (const auto& p : points)
    for (std::size_t w = 0; w < s.group().order(); ++w) {
      ++res.inputs;
      if (!(applyLC(c, embX(p, w)) == rhsOf(p, w))) {
        res.holds = false;
        res.witness = inputJson(p, w).dump();
        return res;
      }
    }

  try {
    AdjointAction act(d, n);
    for (std::size_t k = 0; k < d->rank(); ++k)
      act.assign("s" + std::to_string(k + 1), Cyc(act.field(), mpq_class(static_cast<long>(k) + 2)));
    const LieMap& cm = c.lieMap();
    const LieMap cmInv = cm.inverse();
    auto lie = [&](const LElement& x) {
      return act.ext(x.g) * act.diagram(s.diagramImage(x.sigma).simplePermutation());
    };
    const LieMap adT = act.ext(t), adTInv = act.ext(tInv);
    for (const auto& p : points)
      for (std::size_t w = 0; w < s.group().order(); ++w) {
        const LieMap lhs = cm * lie(embX(p, w)) * cmInv;
        const LieMap rhs = adT * lie(embNegX(minusOneOnLS(p, w).first, w)) * adTInv;
        if (!(lhs == rhs)) {
          res.holds = false;
          res.witness = inputJson(p, w).dump();
          res.matrixChecked = true;
          return res;
        }
      }
    res.matrixChecked = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidType) throw;
  }
  return res;
}

std::vector<TwistedTorusDatum> cyclicTwists(const DatumPtr& d, std::size_t order, Int n) {
  std::vector<TwistedTorusDatum> out;
  const auto group = enumerateWeylGroup(d);
  for (const auto& p : diagramAutomorphisms(*d)) {
    const auto theta = PinnedAutomorphism::fromPermutation(d, p);
    if (order % static_cast<std::size_t>(theta.order()) != 0) continue;
    for (const auto& w : group)
      if (power(w.charMatrix() * theta.charMap(), static_cast<Int>(order)).isIdentity())
        out.push_back(TwistedTorusDatum::cyclic(d, CoeffAction::trivial(FiniteGroup::cyclic(order), n), w, theta));
  }
  return out;
}

nlohmann::json toJson(const RCochain& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& t : r.values) v.push_back(toJson(t));
  return {{"label", r.label}, {"values", v}};
}

}  // namespace lgk
