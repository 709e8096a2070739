#include "lgk/fixedgroup.hpp"

#include <algorithm>
#include <cctype>

#include "lgk/error.hpp"

namespace lgk {

FixedSubgroupDatum buildFixedDatum(const DatumPtr& d, const PinnedAutomorphism& theta) {
  if (!theta.datum() || !(*theta.datum() == *d))
    throw Error(ErrorCode::InvalidAutomorphism, "theta is not an automorphism of this datum");
  const std::size_t r = d->rank();
  FixedSubgroupDatum fd;
  fd.parent_ = d;
  fd.theta_ = theta;

  const SmithForm snf = smithNormalForm(theta.charMap() - IntMatrix::identity(r));
  const auto diag = snf.diagonal();
  std::vector<std::size_t> freeRows;
  for (std::size_t k = 0; k < r; ++k)
    if (k >= diag.size() || diag[k] == 0) freeRows.push_back(k);
  std::vector<IntVec> resRows;
  for (std::size_t k : freeRows) resRows.push_back(snf.U.row(k));
  fd.res_ = IntMatrix::fromRows(resRows);
  fd.fixedCochar_ = resRows;
  const auto uTinv = integerInverse(snf.U.transpose());
  if (!uTinv) throw Error(ErrorCode::ConstructionFailure, "Smith transform is not unimodular");

  std::vector<bool> seen(d->semisimpleRank(), false);
  std::vector<IntVec> roots, coroots;
  for (std::size_t i = 0; i < d->semisimpleRank(); ++i) {
    if (seen[i]) continue;
    RestrictedSimpleRoot sr;
    std::size_t x = i;
    do {
      sr.fiber.push_back(x);
      seen[x] = true;
      x = theta.simplePermutation()[x];
    } while (x != i);
    std::sort(sr.fiber.begin(), sr.fiber.end());
    sr.type = classifyOrbit(*d, sr.fiber);
    sr.c = sr.type == OrbitType::R2 ? 2 : 1;
    sr.root = fd.restrict(d->root(i));
    IntVec h(r, 0);
    for (std::size_t b : sr.fiber) h = h + d->coroot(b);
    sr.parentCoroot = sr.c * h;
    const IntVec z = uTinv->apply(sr.parentCoroot);
    for (std::size_t k = 0; k < r; ++k)
      if (std::find(freeRows.begin(), freeRows.end(), k) == freeRows.end() && z[k] != 0)
        throw Error(ErrorCode::ConstructionFailure, "restricted coroot is not theta-fixed");
    for (std::size_t k : freeRows) sr.coroot.push_back(z[k]);
    roots.push_back(sr.root);
    coroots.push_back(sr.coroot);
    fd.simple_.push_back(std::move(sr));
  }

  IntMatrix cartan(roots.size(), roots.size());
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b) cartan(a, b) = dot(roots[a], coroots[b]);
  try {
    fd.type_ = identifyCartanType(cartan);
    std::string family = fd.type_;
    if (family.find('+') == std::string::npos)
      while (!family.empty() && std::isdigit(static_cast<unsigned char>(family.back()))) family.pop_back();
    fd.restricted_ = std::make_shared<const BasedRootDatum>(
        BasedRootDatum::fromSimple(family, Isogeny::Other, std::move(roots), std::move(coroots)));
  } catch (const Error& e) {
    throw Error(ErrorCode::ConstructionFailure, std::string("restricted datum: ") + e.what());
  }
  return fd;
}

nlohmann::json FixedSubgroupDatum::toJson() const {
  nlohmann::json simple = nlohmann::json::array();
  for (const auto& s : simple_)
    simple.push_back({{"fiber", s.fiber}, {"type", to_string(s.type)}, {"c", s.c}, {"root", s.root}, {"coroot", s.coroot}});
  return {{"type", type_}, {"theta", theta_.simplePermutation()}, {"simple", simple},
          {"restricted", lgk::toJson(*restricted_)}};
}

std::optional<std::string> validateFixedDatum(const FixedSubgroupDatum& fd) {
  const BasedRootDatum& d = *fd.parent();
  const auto& perm = fd.theta().simplePermutation();
  std::vector<int> owner(d.semisimpleRank(), -1);
  for (std::size_t j = 0; j < fd.simpleRoots().size(); ++j) {
    const auto& s = fd.simpleRoots()[j];
    for (std::size_t b : s.fiber) {
      if (owner[b] >= 0) return "simple root " + std::to_string(b) + " lies in two fibers";
      owner[b] = static_cast<int>(j);
      if (std::find(s.fiber.begin(), s.fiber.end(), perm[b]) == s.fiber.end()) return "fiber is not theta-stable";
      if (fd.restrict(d.root(b)) != s.root) return "fiber member restricts elsewhere";
    }
    for (std::size_t k = 0; k < j; ++k)
      if (fd.simpleRoots()[k].root == s.root) return "distinct orbits restrict to the same root";
    if (dot(s.root, s.coroot) != 2) return "<alpha_res, H_res> != 2 for fiber " + nlohmann::json(s.fiber).dump();
    bool orthogonal = true;
    for (std::size_t a : s.fiber)
      for (std::size_t b : s.fiber)
        if (a != b && dot(d.root(a), d.coroot(b)) != 0) orthogonal = false;
    if (orthogonal != (s.c == 1)) return "c does not match orthogonality of fiber " + nlohmann::json(s.fiber).dump();
  }
  for (int o : owner)
    if (o < 0) return "restriction misses a simple root";
  if (auto err = fd.restricted()->validate()) return "restricted datum: " + *err;
  return std::nullopt;
}

std::size_t fixedWeylCount(const DatumPtr& d, const PinnedAutomorphism& theta) {
  std::size_t k = 0;
  for (const auto& w : enumerateWeylGroup(d))
    if (conjugateByDiagram(theta, w) == w) ++k;
  return k;
}

bool FixedChevalleyResult::allOk() const {
  return std::all_of(checks.begin(), checks.end(), [](const ChevalleyCheck& c) { return c.ok; });
}

nlohmann::json FixedChevalleyResult::toJson() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : checks) j.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"checks", j}, {"exponents", exponents}, {"conjugator", lgk::toJson(conjugator)}};
}

FixedChevalleyResult verifyChevalleyOnFixed(const FixedSubgroupDatum& fd, const ChevalleyInvolution& c, int depth) {
  const DatumPtr& d = fd.parent();
  requireSameDatum(c.datum(), d);
  const Int n = c.modulus();
  AdjointAction act(d, n);
  act.assign("two", Cyc(act.field(), 2));
  const LieModel& lie = act.lie();
  const MatrixModel& m = act.typeModel();
  const LieMap& cm = c.lieMap();
  const LieMap th = act.diagram(fd.theta().simplePermutation());
  const Cyc two(act.field(), 2);

  struct Triple {
    FieldMatrix x, y, h;
  };
  std::vector<Triple> triples;
  for (const auto& s : fd.simpleRoots()) {
    const Cyc cc(act.field(), s.c);
    FieldMatrix x(m.field(), m.dim(), m.dim()), y = x, h = x;
    for (std::size_t b : s.fiber) {
      x = x + m.X(b);
      y = y + m.Y(b) * cc;
      h = h + m.H(b) * cc;
    }
    triples.push_back({x, y, h});
  }

  FixedChevalleyResult res;
  {
    ChevalleyCheck k{"fixed-pinning", true, ""};
    for (std::size_t j = 0; j < triples.size() && k.ok; ++j) {
      const auto& [x, y, h] = triples[j];
      if (!(lie.apply(th, x) == x && lie.apply(th, y) == y && lie.apply(th, h) == h)) {
        k.ok = false;
        k.detail = "pinning vector not theta-fixed at restricted root " + std::to_string(j + 1);
      } else if (!(commutator(h, x) == x * two && commutator(x, y) == h && commutator(h, y) == y * Cyc(act.field(), -2))) {
        k.ok = false;
        k.detail = "not an sl2-triple at restricted root " + std::to_string(j + 1);
      }
    }
    res.checks.push_back(k);
  }
  {
    ChevalleyCheck k{"chevalley-preserves-fixed", true, ""};
    for (std::size_t j = 0; j < triples.size() && k.ok; ++j) {
      const auto& [x, y, h] = triples[j];
      const FieldMatrix cx = lie.apply(cm, x), cy = lie.apply(cm, y), ch = lie.apply(cm, h);
      if (!(lie.apply(th, cx) == cx && lie.apply(th, cy) == cy && ch == h * Cyc(act.field(), -1))) {
        k.ok = false;
        k.detail = "image leaves the fixed pinning data at restricted root " + std::to_string(j + 1);
      }
    }
    res.checks.push_back(k);
  }
  {
    ChevalleyCheck k{"restricted-torus-inversion", true, ""};
    const IntMatrix l = c.latticeMap();
    for (std::size_t i = 0; i < d->rank() && k.ok; ++i) {
      IntVec e(d->rank(), 0);
      e[i] = 1;
      if (fd.restrict(l.apply(e)) != -fd.restrict(e)) {
        k.ok = false;
        k.detail = "lattice map is not -1 on the restricted lattice";
      }
    }
    res.checks.push_back(k);
  }

  const std::size_t f = fd.fixedCocharBasis().size();
  std::optional<IntVec> best;
  IntVec b(f, -depth);
  auto cost = [](const IntVec& v) {
    Int s = 0;
    for (Int x : v) s += x < 0 ? -x : x;
    return s;
  };
  for (;;) {
    bool ok = true;
    for (const auto& s : fd.simpleRoots())
      if (dot(s.root, b) != (s.c == 2 ? -1 : 0)) ok = false;
    if (ok && (!best || cost(b) < cost(*best))) best = b;
    std::size_t j = f;
    while (j > 0 && ++b[j - 1] > depth) b[--j] = -depth;
    if (j == 0) break;
  }
  if (!best) throw Error(ErrorCode::WitnessNotFound, "no fixed torus conjugator with exponents up to " + std::to_string(depth));

  TorusPoint t = TorusPoint::identity(d, n);
  for (std::size_t k = 0; k < f; ++k)
    if ((*best)[k] != 0) t = t * evalCocharacter(d, fd.fixedCocharBasis()[k], KElem::symbol(n, "two", (*best)[k]));
  res.exponents = *best;
  res.conjugator = t;
  {
    ChevalleyCheck k{"opposite-conjugator", true, "exponents " + nlohmann::json(*best).dump()};
    const LieMap adt = act.torus(t) * cm;
    for (std::size_t j = 0; j < triples.size() && k.ok; ++j) {
      const auto& s = fd.simpleRoots()[j];
      const KElem want = s.c == 2 ? KElem::symbol(n, "two", -1) : KElem::one(n);
      if (evalRoot(d->root(s.fiber.front()), t) != want) {
        k.ok = false;
        k.detail = "alpha_res(t) != 1/c at restricted root " + std::to_string(j + 1);
      } else if (!(lie.apply(adt, triples[j].x) == triples[j].y)) {
        k.ok = false;
        k.detail = "Ad(t) C(X_res) != X_-res at restricted root " + std::to_string(j + 1);
      }
    }
    res.checks.push_back(k);
  }
  return res;
}

}  // namespace lgk
