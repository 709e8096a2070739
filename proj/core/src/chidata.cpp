#include "lgk/chidata.hpp"

#include <algorithm>
#include <set>

#include "lgk/error.hpp"

namespace lgk {

WeylElem conjugateByDiagram(const PinnedAutomorphism& theta, const WeylElem& w) {
  if (theta.isIdentity()) return w;
  const IntMatrix m = theta.charMap() * w.charMatrix() * theta.inverse().charMap();
  return WeylElem::fromMatrix(w.datum(), m);
}

TwistedTorusDatum::TwistedTorusDatum(DatumPtr d, CoeffAction coeff, std::vector<WeylElem> weylImages,
                                     std::vector<PinnedAutomorphism> diagramImages)
    : datum_(std::move(d)), coeff_(std::move(coeff)), weyl_(std::move(weylImages)), theta_(std::move(diagramImages)) {
  const FiniteGroup& g = coeff_.group();
  const std::size_t n = g.order();
  if (weyl_.size() != n || theta_.size() != n)
    throw Error(ErrorCode::InvalidData, "twisted torus: one Weyl image and one diagram image per group element");
  for (std::size_t a = 0; a < n; ++a) {
    requireSameDatum(weyl_[a].datum(), datum_);
    requireSameDatum(theta_[a].datum(), datum_);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = g.mul(a, b);
      if (!(theta_[ab] == theta_[a].compose(theta_[b])))
        throw Error(ErrorCode::InvalidData, "diagram images do not form a homomorphism");
      if (!(weyl_[ab] == weyl_[a] * conjugateByDiagram(theta_[a], weyl_[b])))
        throw Error(ErrorCode::InvalidData, "Weyl images violate the twisted cocycle condition at (" +
                                                std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  rootAction_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const IntMatrix m = charMatrix(a);
    rootAction_[a].resize(datum_->numRoots());
    for (std::size_t r = 0; r < datum_->numRoots(); ++r) rootAction_[a][r] = *datum_->rootIndex(m.apply(datum_->root(r)));
  }
}

TwistedTorusDatum TwistedTorusDatum::split(DatumPtr d, Int n) {
  return TwistedTorusDatum(d, CoeffAction::trivial(FiniteGroup::trivial(), n), {WeylElem::identity(d)},
                           {PinnedAutomorphism::identity(d)});
}

TwistedTorusDatum TwistedTorusDatum::cyclic(DatumPtr d, CoeffAction coeff, const WeylElem& w,
                                            const PinnedAutomorphism& theta) {
  const std::size_t n = coeff.group().order();
  if (coeff.group().table() != FiniteGroup::cyclic(n).table())
    throw Error(ErrorCode::InvalidData, "coefficient action is not over the standard cyclic group");
  const IntMatrix u = w.charMatrix() * theta.charMap();
  if (!power(u, static_cast<Int>(n)).isIdentity())
    throw Error(ErrorCode::InvalidData, "generator does not have order dividing " + std::to_string(n));
  std::vector<WeylElem> ws;
  std::vector<PinnedAutomorphism> ths;
  PinnedAutomorphism tk = PinnedAutomorphism::identity(d);
  IntMatrix uk = IntMatrix::identity(d->rank());
  for (std::size_t k = 0; k < n; ++k) {
    ths.push_back(tk);
    ws.push_back(WeylElem::fromMatrix(d, uk * tk.inverse().charMap()));
    tk = theta.compose(tk);
    uk = u * uk;
  }
  return TwistedTorusDatum(std::move(d), std::move(coeff), std::move(ws), std::move(ths));
}

IntMatrix TwistedTorusDatum::charMatrix(std::size_t g) const { return weyl_[g].charMatrix() * theta_[g].charMap(); }

TorusPoint TwistedTorusDatum::act(std::size_t g, const TorusPoint& t) const {
  return t.coeffAct(coeff_, g).mapCochar(weyl_[g].cocharMatrix() * theta_[g].cocharMap());
}

nlohmann::json TwistedTorusDatum::toJson() const {
  nlohmann::json el = nlohmann::json::array();
  for (std::size_t g = 0; g < weyl_.size(); ++g)
    el.push_back({{"weyl", wordToJson(weyl_[g].word())},
                  {"theta", theta_[g].simplePermutation()},
                  {"zetaMultiplier", coeff_.zetaMultiplier(g)}});
  return {{"order", weyl_.size()}, {"elements", el}};
}

std::optional<std::string> validateAData(const TwistedTorusDatum& s, const AData& a, const PinnedAutomorphism* theta) {
  const BasedRootDatum& d = *s.datum();
  if (a.values.size() != d.numRoots()) return "a-data must cover every root";
  const KElem m1 = KElem::minusOne(s.modulus());
  for (std::size_t r = 0; r < d.numRoots(); ++r) {
    if (a.values[d.negative(r)] != m1 * a.values[r]) return "a_{-alpha} != -a_alpha at root " + std::to_string(r);
    for (std::size_t g = 0; g < s.group().order(); ++g)
      if (a.values[s.actRoot(g, r)] != s.actCoeff(g, a.values[r]))
        return "a_{sigma alpha} != sigma(a_alpha) at root " + std::to_string(r) + ", sigma " + std::to_string(g);
    if (theta && a.values[theta->applyRoot(r)] != a.values[r]) return "not theta-invariant at root " + std::to_string(r);
  }
  return std::nullopt;
}

AData negateA(const AData& a) {
  AData out = a;
  for (auto& v : out.values) v = KElem::minusOne(v.modulus()) * v;
  return out;
}

std::optional<std::string> validateChiData(const TwistedTorusDatum& s, const ChiData& x) {
  const BasedRootDatum& d = *s.datum();
  const Int n = x.modulus;
  if (x.exponents.size() != d.numRoots() || x.orders.size() != d.numRoots()) return "chi-data must cover every root";
  if (n != s.modulus()) return "chi-data modulus differs from the coefficient field";
  for (std::size_t r = 0; r < d.numRoots(); ++r) {
    if (x.orders[r] < 1) return "nonpositive order at root " + std::to_string(r);
    if (floorMod(x.orders[r] * x.exponents[r], n) != 0) return "chi_alpha is not a character of D_alpha at root " + std::to_string(r);
    const std::size_t nr = d.negative(r);
    if (floorMod(x.exponents[nr] + x.exponents[r], n) != 0 || x.orders[nr] != x.orders[r])
      return "chi_{-alpha} != chi_alpha^{-1} at root " + std::to_string(r);
    for (std::size_t g = 0; g < s.group().order(); ++g) {
      const std::size_t gr = s.actRoot(g, r);
      if (floorMod(x.exponents[gr] - s.coeff().zetaMultiplier(g) * x.exponents[r], n) != 0 || x.orders[gr] != x.orders[r])
        return "chi_{sigma alpha} != sigma o chi_alpha at root " + std::to_string(r) + ", sigma " + std::to_string(g);
    }
  }
  return std::nullopt;
}

ChiData negateX(const ChiData& x) {
  ChiData out = x;
  for (auto& k : out.exponents) k = floorMod(-k, out.modulus);
  return out;
}

Int characterOrder(const ChiData& x, std::size_t rootIdx) {
  return x.modulus / gcd(floorMod(x.exponents[rootIdx], x.modulus), x.modulus);
}

void requireInvariantScaling(const TwistedTorusDatum& s, const ScalingVector& c) {
  requireWeylInvariant(*s.datum(), c);
  for (std::size_t g = 0; g < s.group().order(); ++g)
    for (std::size_t r = 0; r < c.size(); ++r)
      if (c[s.actRoot(g, r)] != s.actCoeff(g, c[r]))
        throw Error(ErrorCode::InvalidScaling, "scaling vector is not Gamma-invariant at root " + std::to_string(r));
}

ScalingVector constantScaling(const BasedRootDatum& d, const KElem& value) {
  return ScalingVector(d.numRoots(), value);
}

AData scaleA(const TwistedTorusDatum& s, const ScalingVector& c, const AData& a) {
  requireInvariantScaling(s, c);
  if (a.values.size() != c.size()) throw Error(ErrorCode::DimensionMismatch, "a-data and scaling vector sizes");
  AData out = a;
  for (std::size_t r = 0; r < c.size(); ++r) out.values[r] = c[r] * a.values[r];
  return out;
}

ScalingVector multiplyScaling(const ScalingVector& a, const ScalingVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "scaling vector sizes");
  ScalingVector out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) out[r] = a[r] * b[r];
  return out;
}

namespace {

struct StabElem {
  std::size_t g;
  bool flip;
};

std::vector<StabElem> signedStabilizer(const TwistedTorusDatum& s, std::size_t r) {
  std::vector<StabElem> out;
  const std::size_t nr = s.datum()->negative(r);
  for (std::size_t g = 0; g < s.group().order(); ++g) {
    const std::size_t gr = s.actRoot(g, r);
    if (gr == r) out.push_back({g, false});
    if (gr == nr) out.push_back({g, true});
  }
  return out;
}

KElem randomElement(Int n, std::mt19937_64& rng, const std::vector<std::string>& symbols) {
  std::uniform_int_distribution<Int> z(0, n - 1), e(-1, 1);
  std::map<std::string, Int> free;
  for (const auto& sym : symbols)
    if (Int k = e(rng); k != 0) free[sym] = k;
  return KElem(n, z(rng), std::move(free));
}

// Fills every root in the Gamma x {+-1} orbit of r from the value at r.
template <class Value, class Act, class Neg>
void propagate(const TwistedTorusDatum& s, std::size_t r, const Value& v, std::vector<std::optional<Value>>& out, Act act,
               Neg neg) {
  for (std::size_t g = 0; g < s.group().order(); ++g) {
    const Value gv = act(g, v);
    const std::size_t gr = s.actRoot(g, r);
    out[gr] = gv;
    out[s.datum()->negative(gr)] = neg(gv);
  }
}

std::vector<std::vector<std::size_t>> weylOrbits(const BasedRootDatum& d) {
  std::vector<int> label(d.numRoots(), -1);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t r = 0; r < d.numRoots(); ++r) {
    if (label[r] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<std::size_t> todo{r}, orbit;
    label[r] = id;
    while (!todo.empty()) {
      const std::size_t x = todo.back();
      todo.pop_back();
      orbit.push_back(x);
      for (std::size_t i = 0; i < d.semisimpleRank(); ++i) {
        const std::size_t y = *d.rootIndex(d.reflectChar(i, d.root(x)));
        if (label[y] < 0) {
          label[y] = id;
          todo.push_back(y);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

AData randomAData(const TwistedTorusDatum& s, std::mt19937_64& rng, const std::vector<std::string>& symbols) {
  const BasedRootDatum& d = *s.datum();
  const Int n = s.modulus();
  const KElem m1 = KElem::minusOne(n);
  std::vector<std::optional<KElem>> vals(d.numRoots());
  for (std::size_t r = 0; r < d.numRoots(); ++r) {
    if (vals[r]) continue;
    const auto stab = signedStabilizer(s, r);
    std::vector<KElem> seeds;
    auto consider = [&](const KElem& k) {
      for (const auto& h : stab) {
        const KElem img = h.flip ? m1 * s.actCoeff(h.g, k) : s.actCoeff(h.g, k);
        if (img != k) return;
      }
      seeds.push_back(k);
    };
    for (Int z = 0; z < n; ++z) {
      consider(KElem(n, z));
      for (const auto& sym : symbols) {
        consider(KElem(n, z, {{sym, 1}}));
        consider(KElem(n, z, {{sym, -1}}));
      }
    }
    if (seeds.empty())
      throw Error(ErrorCode::InvalidData, "no a-data value at root " + std::to_string(r) + " is compatible with its stabilizer");
    KElem a = seeds[std::uniform_int_distribution<std::size_t>(0, seeds.size() - 1)(rng)];
    const KElem y = randomElement(n, rng, symbols);
    std::set<std::size_t> seen;
    for (const auto& h : stab)
      if (seen.insert(h.g).second) a = a * s.actCoeff(h.g, y);
    propagate(s, r, a, vals, [&](std::size_t g, const KElem& k) { return s.actCoeff(g, k); },
              [&](const KElem& k) { return m1 * k; });
  }
  AData out;
  for (auto& v : vals) out.values.push_back(*v);
  if (auto err = validateAData(s, out)) throw Error(ErrorCode::ConstructionFailure, "random a-data: " + *err);
  return out;
}

ChiData randomChiData(const TwistedTorusDatum& s, std::mt19937_64& rng, Int maxOrder) {
  const BasedRootDatum& d = *s.datum();
  const Int n = s.modulus();
  std::vector<Int> orders;
  for (Int k = 1; k <= maxOrder; ++k)
    if (n % k == 0) orders.push_back(k);
  std::vector<std::optional<std::pair<Int, Int>>> vals(d.numRoots());
  for (std::size_t r = 0; r < d.numRoots(); ++r) {
    if (vals[r]) continue;
    const auto stab = signedStabilizer(s, r);
    const Int ord = orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
    std::vector<Int> cands;
    for (Int k = 0; k < n; ++k) {
      if (floorMod(ord * k, n) != 0) continue;
      bool ok = true;
      for (const auto& h : stab) {
        const Int img = (h.flip ? -1 : 1) * s.coeff().zetaMultiplier(h.g) * k;
        ok = ok && floorMod(img - k, n) == 0;
      }
      if (ok) cands.push_back(k);
    }
    const Int k = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    propagate(
        s, r, std::pair<Int, Int>{k, ord}, vals,
        [&](std::size_t g, const std::pair<Int, Int>& v) {
          return std::pair<Int, Int>{floorMod(s.coeff().zetaMultiplier(g) * v.first, n), v.second};
        },
        [&](const std::pair<Int, Int>& v) { return std::pair<Int, Int>{floorMod(-v.first, n), v.second}; });
  }
  ChiData out;
  out.modulus = n;
  for (auto& v : vals) {
    out.exponents.push_back(v->first);
    out.orders.push_back(v->second);
  }
  if (auto err = validateChiData(s, out)) throw Error(ErrorCode::ConstructionFailure, "random chi-data: " + *err);
  return out;
}

ScalingVector randomScaling(const TwistedTorusDatum& s, std::mt19937_64& rng, const std::vector<std::string>& symbols) {
  const BasedRootDatum& d = *s.datum();
  ScalingVector c(d.numRoots());
  for (const auto& orbit : weylOrbits(d)) {
    const KElem y = randomElement(s.modulus(), rng, symbols);
    KElem v = KElem::one(s.modulus());
    for (std::size_t g = 0; g < s.group().order(); ++g) v = v * s.actCoeff(g, y);
    for (std::size_t r : orbit) c[r] = v;
  }
  requireInvariantScaling(s, c);
  return c;
}

nlohmann::json toJson(const AData& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : a.values) j.push_back(toJson(v));
  return j;
}

nlohmann::json toJson(const ChiData& x) {
  return {{"modulus", x.modulus}, {"exponents", x.exponents}, {"orders", x.orders}};
}

std::string to_string(OrbitType t) {
  switch (t) {
    case OrbitType::R1: return "R1";
    case OrbitType::R2: return "R2";
    case OrbitType::R3: return "R3";
  }
  return "?";
}

OrbitType classifyOrbit(const BasedRootDatum& d, const std::vector<std::size_t>& roots, const OrbitClassifier& r3) {
  if (r3 && r3(d, roots)) return OrbitType::R3;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (d.rootIndex(d.root(roots[i]) + d.root(roots[j]))) return OrbitType::R2;
  return OrbitType::R1;
}

std::vector<RootOrbit> thetaOrbits(const BasedRootDatum& d, const PinnedAutomorphism& theta, const OrbitClassifier& r3) {
  std::vector<bool> done(d.numRoots(), false);
  std::vector<RootOrbit> out;
  for (std::size_t r = 0; r < d.numRoots(); ++r) {
    if (done[r]) continue;
    RootOrbit o;
    std::size_t x = r;
    do {
      o.roots.push_back(x);
      done[x] = true;
      x = theta.applyRoot(x);
    } while (x != r);
    std::sort(o.roots.begin(), o.roots.end());
    o.type = classifyOrbit(d, o.roots, r3);
    out.push_back(std::move(o));
  }
  return out;
}

OrbitNegationResult minusOnePreservesOrbits(const BasedRootDatum& d, const PinnedAutomorphism& theta,
                                            const OrbitClassifier& r3) {
  const auto orbits = thetaOrbits(d, theta, r3);
  std::vector<std::size_t> where(d.numRoots());
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (std::size_t r : orbits[k].roots) where[r] = k;
  OrbitNegationResult res;
  for (const auto& o : orbits) {
    std::vector<std::size_t> neg;
    for (std::size_t r : o.roots) neg.push_back(d.negative(r));
    std::sort(neg.begin(), neg.end());
    const RootOrbit& target = orbits[where[neg.front()]];
    if (target.roots != neg || target.type != o.type) {
      res.holds = false;
      res.witness = o;
      return res;
    }
  }
  return res;
}

nlohmann::json toJson(const RootOrbit& o) { return {{"roots", o.roots}, {"type", to_string(o.type)}}; }

}  // namespace lgk
