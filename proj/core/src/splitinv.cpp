#include "lgk/splitinv.hpp"

#include <random>

#include "lgk/error.hpp"

namespace lgk {

std::vector<ExtWeylElem> splittingInvariantCore(const TwistedTorusDatum& s, const AData& a, const ScalingVector& c,
                                                InversionConvention conv) {
  if (auto err = validateAData(s, a)) throw Error(ErrorCode::InvalidData, *err);
  requireInvariantScaling(s, c);
  const DatumPtr& d = s.datum();
  const Int n = s.modulus();
  std::vector<ExtWeylElem> out;
  for (std::size_t g = 0; g < s.group().order(); ++g) {
    const WeylElem& w = s.weylImage(g);
    TorusPoint t = TorusPoint::identity(d, n);
    for (std::size_t b : convolutionIndexSet(w, conv)) t = t * evalCocharacter(d, d->coroot(b), a.values[b]);
    out.push_back(ExtWeylElem::torus(t) * rescaledSectionStepwise(c, w, n));
  }
  return out;
}

nlohmann::json SplcngResult::toJson() const {
  nlohmann::json j{{"holds", holds}};
  if (failing) j["failingSigma"] = *failing;
  if (lhs) j["lhs"] = lgk::toJson(*lhs);
  if (rhs) j["rhs"] = lgk::toJson(*rhs);
  return j;
}

SplcngResult verifySplcng(const TwistedTorusDatum& s, const AData& a, const ScalingVector& c, InversionConvention conv) {
  const auto left = splittingInvariantCore(s, a, c, conv);
  const auto right =
      splittingInvariantCore(s, scaleA(s, c, a), constantScaling(*s.datum(), KElem::one(s.modulus())), conv);
  SplcngResult r;
  for (std::size_t g = 0; g < left.size(); ++g)
    if (!(left[g] == right[g])) {
      r.holds = false;
      r.failing = g;
      r.lhs = left[g];
      r.rhs = right[g];
      break;
    }
  return r;
}

nlohmann::json SplcngInstance::describe() const {
  return {{"seed", seed}, {"type", torus.datum()->label()}, {"gamma", torus.toJson()}, {"a", toJson(a)},
          {"c", toJson(AData{c})}};
}

namespace {

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Int powMod(Int b, std::size_t e, Int n) {
  Int r = 1;
  for (std::size_t k = 0; k < e; ++k) r = floorMod(r * b, n);
  return r;
}

CoeffAction randomCoeffAction(std::size_t order, Int n, std::mt19937_64& rng, std::vector<std::string>& symbols) {
  std::vector<Int> units;
  for (Int m = 1; m < n; ++m)
    if (gcd(m, n) == 1 && powMod(m, order, n) == 1) units.push_back(m);
  const Int m = pick(units, rng);
  std::vector<Int> mult(order);
  for (std::size_t k = 0; k < order; ++k) mult[k] = powMod(m, k, n);
  std::vector<std::map<std::string, KElem>> images(order);
  if (order == 2) {
    symbols = {"x", "y"};
    for (const auto& s : symbols) {
      const Int e = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      const Int z = std::uniform_int_distribution<int>(0, 1)(rng) ? n / 2 : 0;
      images[1][s] = KElem(n, z, {{s, e}});
    }
  } else {
    symbols.clear();
    for (std::size_t i = 0; i < order; ++i) symbols.push_back("x" + std::to_string(i));
    if (std::uniform_int_distribution<int>(0, 1)(rng))
      for (std::size_t k = 0; k < order; ++k)
        for (std::size_t i = 0; i < order; ++i) images[k][symbols[i]] = KElem::symbol(n, symbols[(i + k) % order]);
  }
  return CoeffAction(FiniteGroup::cyclic(order), n, std::move(mult), std::move(images));
}

}  // namespace

SplcngInstance randomSplcngInstance(const DatumPtr& d, std::size_t order, std::uint64_t seed, Int n) {
  std::mt19937_64 rng(seed);
  std::vector<PinnedAutomorphism> thetas;
  for (const auto& p : diagramAutomorphisms(*d)) {
    auto th = PinnedAutomorphism::fromPermutation(d, p);
    if (order % static_cast<std::size_t>(th.order()) == 0) thetas.push_back(th);
  }
  const auto group = enumerateWeylGroup(d);
  for (int attempt = 0; attempt < 64; ++attempt) {
    const PinnedAutomorphism& theta = pick(thetas, rng);
    std::vector<WeylElem> ws;
    for (const auto& w : group)
      if (power(w.charMatrix() * theta.charMap(), static_cast<Int>(order)).isIdentity()) ws.push_back(w);
    const WeylElem& w = pick(ws, rng);
    std::vector<std::string> symbols;
    CoeffAction coeff = randomCoeffAction(order, n, rng, symbols);
    if (coeff.validate(symbols)) continue;
    TwistedTorusDatum s = TwistedTorusDatum::cyclic(d, std::move(coeff), w, theta);
    try {
      AData a = randomAData(s, rng, symbols);
      ScalingVector c = randomScaling(s, rng, symbols);
      return {std::move(s), std::move(a), std::move(c), seed};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidData) throw;
    }
  }
  throw Error(ErrorCode::ConstructionFailure, "no random instance with valid a-data after 64 attempts");
}

}  // namespace lgk
