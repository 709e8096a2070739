#include "lgk/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include <openssl/evp.h>
#include <toml.hpp>

#include "lgk/chevalley.hpp"
#include "lgk/chidata.hpp"
#include "lgk/endofourier.hpp"
#include "lgk/error.hpp"
#include "lgk/fixedgroup.hpp"
#include "lgk/lembed.hpp"
#include "lgk/models.hpp"
#include "lgk/splitinv.hpp"

#ifndef LGK_VERSION
#define LGK_VERSION "0.0.0"
#endif

namespace lgk {

std::string_view version() { return LGK_VERSION; }

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidSpec, msg); }

const std::set<std::string> kTopKeys{"group", "theta", "gamma", "coeff", "data", "convention", "suites", "bounds"};

void requireKeys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) bad(where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) bad("unknown key '" + k + "' in " + where);
}

template <class T>
T field(const json& j, const std::string& key, const std::string& where, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(where + "." + key + " has the wrong type");
  }
}

std::vector<std::size_t> oneBasedList(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be a list of node numbers");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 1) bad(where + " entries must be integers >= 1");
    out.push_back(v.get<std::size_t>() - 1);
  }
  return out;
}

IntMatrix matrixFromJson(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad(where + " must be a non-empty list of rows");
  std::vector<IntVec> rows;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != j.size()) bad(where + " must be square");
    IntVec row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) bad(where + " entries must be integers");
      row.push_back(x.get<Int>());
    }
    rows.push_back(row);
  }
  return IntMatrix::fromRows(rows);
}

bool needsGroup(const std::string& s) {
  static const std::set<std::string> free{"fourier", "whittaker-shift", "contragredient-shift", "coinvariants"};
  return !free.count(s);
}

std::string hexSha256(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << int(md[k]);
  return os.str();
}

// Run context shared by the suites.
struct Ctx {
  const SuiteSpec& spec;
  std::uint64_t seed;

  DatumPtr datum() const {
    const auto& g = *spec.group;
    return buildFromType(g.family, g.rank, g.isogeny);
  }
  Int n() const { return spec.coeff.n; }
  std::optional<std::vector<std::size_t>> theta() const { return spec.gamma.theta ? spec.gamma.theta : spec.theta; }
};

struct Outcome {
  CheckStatus status;
  json witness;
};

Outcome passIf(bool ok, json w) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(w)}; }

// Generator of Z/order acting on K by zeta -> zeta^m and x -> image(x).
CoeffAction cyclicCoeff(const SuiteSpec& spec, std::size_t order) {
  const Int n = spec.coeff.n;
  std::map<std::string, KElem> gen;
  for (const auto& [s, img] : spec.coeff.symbolImages) gen[s] = kelemFromJson(img, n);
  auto step = [&](const KElem& k) {
    KElem out(n, ((k.zeta() * spec.coeff.zetaMultiplier) % n + n) % n);
    for (const auto& [s, e] : k.free()) {
      auto it = gen.find(s);
      out = out * (it == gen.end() ? KElem::symbol(n, s) : it->second).pow(e);
    }
    return out;
  };
  std::vector<Int> mult;
  std::vector<std::map<std::string, KElem>> images;
  Int m = 1;
  std::map<std::string, KElem> cur;
  for (const auto& s : spec.coeff.symbols) cur[s] = KElem::symbol(n, s);
  for (std::size_t g = 0; g < order; ++g) {
    mult.push_back(m);
    images.push_back(cur);
    m = (m * spec.coeff.zetaMultiplier % n + n) % n;
    for (auto& [s, v] : cur) v = step(v);
  }
  CoeffAction a(FiniteGroup::cyclic(order), n, std::move(mult), std::move(images));
  if (auto err = a.validate(spec.coeff.symbols)) throw Error(ErrorCode::InvalidData, *err);
  return a;
}

PinnedAutomorphism thetaOn(const DatumPtr& d, const std::optional<std::vector<std::size_t>>& p) {
  return p ? PinnedAutomorphism::fromPermutation(d, *p) : PinnedAutomorphism::identity(d);
}

// Gamma as configured in the suite file, on the datum d.
TwistedTorusDatum specTwist(const Ctx& c, const DatumPtr& d) {
  const auto& g = c.spec.gamma;
  if (g.order == 1) return TwistedTorusDatum::split(d, c.n());
  const WeylElem w = g.weyl ? WeylElem::fromWord(d, *g.weyl) : WeylElem::identity(d);
  return TwistedTorusDatum::cyclic(d, cyclicCoeff(c.spec, g.order), w, thetaOn(d, c.theta()));
}

std::vector<KElem> kelemList(const json& j, Int n, std::size_t count, const std::string& where) {
  if (!j.is_array() || j.size() != count)
    throw Error(ErrorCode::InvalidData, where + " needs one entry per root (" + std::to_string(count) + ")");
  std::vector<KElem> out;
  for (const auto& v : j) out.push_back(kelemFromJson(v, n));
  return out;
}

Outcome suiteTitsWelldef(const Ctx& c) {
  const DatumPtr d = c.datum();
  const auto group = enumerateWeylGroup(d, c.spec.bounds.weylCap);
  std::optional<MatrixModel> model;
  try {
    model = MatrixModel::realize(d, c.n());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidType) throw;
  }
  std::size_t words = 0;
  for (const auto& w : group) {
    const ExtWeylElem n = titsSection(w, c.n());
    std::optional<FieldMatrix> m;
    if (model) m = model->embedExt(n);
    for (const auto& word : reducedWords(w)) {
      ++words;
      const bool symbolic = wordProduct(d, word, c.n()) == n;
      const bool matrix = !model || model->sameElement(model->wordMatrix(word), *m);
      if (!symbolic || !matrix)
        return {CheckStatus::Fail,
                {{"word", wordToJson(word)}, {"canonical", wordToJson(w.word())}, {"symbolic", symbolic},
                 {"matrix", matrix}}};
    }
  }
  return {CheckStatus::Pass, {{"elements", group.size()}, {"reducedWords", words}, {"matrixChecked", model.has_value()}}};
}

Outcome suiteInverseSection(const Ctx& c) {
  const DatumPtr d = c.datum();
  const auto group = enumerateWeylGroup(d, c.spec.bounds.weylCap);
  const KElem i = KElem::i(c.n());
  for (const KElem& root : {i, i.inverse()})
    for (const auto& w : group) {
      const auto r = inverseSectionIdentityCheck(w, root);
      if (!r.holds)
        return {CheckStatus::Fail,
                {{"w", wordToJson(w.word())}, {"root", toJson(root)}, {"lhs", toJson(r.lhs)}, {"rhs", toJson(r.rhs)}}};
    }
  return {CheckStatus::Pass, {{"elements", group.size()}, {"roots", json::array({toJson(i), toJson(i.inverse())})}}};
}

Outcome suiteChevalley(const Ctx& c) {
  const auto rep = verifyChevalley(buildChevalley(c.datum(), c.n()));
  return passIf(rep.allOk(), rep.toJson());
}

Outcome suiteFixedgroup(const Ctx& c) {
  const DatumPtr d = c.datum();
  const auto theta = thetaOn(d, c.theta());
  const FixedSubgroupDatum fd = buildFixedDatum(d, theta);
  json w = fd.toJson();
  if (auto err = validateFixedDatum(fd)) {
    w["error"] = *err;
    return {CheckStatus::Fail, w};
  }
  const std::size_t fixedW = fixedWeylCount(d, theta);
  const std::size_t resW = enumerateWeylGroup(fd.restricted(), c.spec.bounds.weylCap).size();
  w["fixedWeyl"] = fixedW;
  w["restrictedWeyl"] = resW;
  const auto res = verifyChevalleyOnFixed(fd, buildChevalley(d, c.n()), c.spec.bounds.searchDepth);
  w["chevalley"] = res.toJson();
  return passIf(fixedW == resW && res.allOk(), w);
}

Outcome suiteOrbitMinusOne(const Ctx& c) {
  const DatumPtr d = c.datum();
  std::vector<std::vector<std::size_t>> perms;
  if (auto t = c.theta())
    perms.push_back(*t);
  else
    perms = diagramAutomorphisms(*d);
  for (const auto& p : perms) {
    const auto r = minusOnePreservesOrbits(*d, PinnedAutomorphism::fromPermutation(d, p));
    if (!r.holds) {
      json w{{"theta", p}};
      if (r.witness) w["orbit"] = toJson(*r.witness);
      return {CheckStatus::Fail, w};
    }
  }
  return {CheckStatus::Pass, {{"automorphisms", perms.size()}}};
}

Outcome suiteSplcng(const Ctx& c) {
  const DatumPtr d = c.datum();
  const auto conv = c.spec.convention;
  if (!c.spec.data.random) {
    const TwistedTorusDatum s = specTwist(c, d);
    const AData a{kelemList(*c.spec.data.adata, c.n(), d->numRoots(), "data.adata")};
    if (auto err = validateAData(s, a)) throw Error(ErrorCode::InvalidData, *err);
    const ScalingVector sc = c.spec.data.scaling
                                 ? kelemList(*c.spec.data.scaling, c.n(), d->numRoots(), "data.scaling")
                                 : constantScaling(*d, KElem::one(c.n()));
    const auto r = verifySplcng(s, a, sc, conv);
    return passIf(r.holds, r.toJson());
  }
  std::size_t passed = 0;
  json failures = json::array();
  for (std::size_t k = 0; k < c.spec.data.instances; ++k) {
    const auto inst = randomSplcngInstance(d, c.spec.gamma.order, c.seed + k, c.n());
    const auto r = verifySplcng(inst.torus, inst.a, inst.c, conv);
    if (r.holds)
      ++passed;
    else if (failures.size() < 3)
      failures.push_back({{"instance", inst.describe()}, {"result", r.toJson()}});
  }
  json w{{"instances", c.spec.data.instances}, {"passed", passed}};
  if (!failures.empty()) w["failures"] = failures;
  return passIf(passed == c.spec.data.instances, w);
}

Outcome suiteChiInv(const Ctx& c) {
  const DatumPtr d = dual(*c.datum());
  const auto cheval = buildChevalley(d, c.n());
  std::vector<TwistedTorusDatum> twists;
  if (c.spec.gamma.order == 1 || c.spec.gamma.weyl)
    twists.push_back(specTwist(c, d));
  else
    twists = cyclicTwists(d, c.spec.gamma.order, c.n());
  std::size_t cochains = 0, matrixChecked = 0;
  for (const auto& s : twists)
    for (const auto& r : searchRCochains(s, c.spec.bounds.orderBound)) {
      ++cochains;
      const auto res = verifyChiInv(cheval, buildLEmbedding(s, r), buildLEmbedding(s, negateRCochain(r)));
      if (res.matrixChecked) ++matrixChecked;
      if (!res.holds)
        return {CheckStatus::Fail, {{"dual", d->label()}, {"twist", s.toJson()}, {"cochain", toJson(r)}, {"result", res.toJson()}}};
    }
  json w{{"dual", d->label()}, {"twists", twists.size()}, {"cochains", cochains}, {"matrixChecked", matrixChecked}};
  if (cochains == 0) {
    w["reason"] = "no r-cochain within the order bound";
    return {CheckStatus::Skipped, w};
  }
  return {CheckStatus::Pass, w};
}

FinAbGroup randomGroup(std::mt19937_64& rng) {
  static const std::vector<FinAbGroup> groups = [] {
    auto g = abelianGroupsUpTo(64);
    g.erase(g.begin());
    return g;
  }();
  return groups[rng() % groups.size()];
}

Outcome suiteFourier(const Ctx& c) {
  std::mt19937_64 rng(c.seed);
  for (std::size_t k = 0; k < c.spec.data.instances; ++k) {
    const PacketTable t = PacketTable::random(randomGroup(rng), rng);
    const FinAbGroup& g = t.group();
    if (auto err = t.checkOrthogonality()) return {CheckStatus::Fail, {{"instance", k}, {"table", t.toJson()}, {"error", *err}}};
    std::vector<Cyc> stable;
    for (std::size_t s = 0; s < g.order(); ++s)
      stable.push_back(Cyc::zeta(g.field(), static_cast<Int>(rng() % g.field()->order())) +
                       Cyc(g.field(), mpq_class(static_cast<long>(rng() % 7) - 3)));
    if (!(fourierForward(t, fourierInvert(t, stable)) == stable))
      return {CheckStatus::Fail, {{"instance", k}, {"factors", g.factors()}, {"error", "round trip differs"}}};
  }
  return {CheckStatus::Pass, {{"instances", c.spec.data.instances}}};
}

Outcome suiteWhittaker(const Ctx& c) {
  std::mt19937_64 rng(c.seed);
  for (std::size_t k = 0; k < c.spec.data.instances; ++k) {
    const PacketTable t = PacketTable::random(randomGroup(rng), rng);
    const FinAbGroup& g = t.group();
    const Character e1{g.element(rng() % g.order())}, e2{g.element(rng() % g.order())};
    const auto w1 = whittakerShift(t, e1), w2 = whittakerShift(t, e2), w12 = whittakerShift(t, multiply(g, e1, e2));
    bool ok = w1.verified && w2.verified && w12.verified;
    for (std::size_t l = 0; l < t.size() && ok; ++l) ok = w1.perm[w2.perm[l]] == w12.perm[l];
    if (!ok)
      return {CheckStatus::Fail,
              {{"instance", k}, {"factors", g.factors()}, {"eta1", e1.exponents}, {"eta2", e2.exponents}}};
  }
  return {CheckStatus::Pass, {{"instances", c.spec.data.instances}}};
}

Outcome suiteContragredient(const Ctx& c) {
  std::mt19937_64 rng(c.seed);
  for (std::size_t k = 0; k < c.spec.data.instances; ++k) {
    const PacketTable t = PacketTable::random(randomGroup(rng), rng);
    const FinAbGroup& g = t.group();
    const GroupAutomorphism a = randomAutomorphism(g, rng);
    const auto p = contragredientShift(t, a);
    const auto want = precomposeShift(t, composeAutomorphisms(g, a, a));
    bool ok = p.verified;
    for (std::size_t l = 0; l < t.size() && ok; ++l) ok = p.perm[p.perm[l]] == want[l];
    if (!ok) {
      json imgs = json::array();
      for (const auto& v : a.images) imgs.push_back(v);
      return {CheckStatus::Fail, {{"instance", k}, {"factors", g.factors()}, {"automorphism", imgs}}};
    }
  }
  return {CheckStatus::Pass, {{"instances", c.spec.data.instances}}};
}

Int matrixOrder(const IntMatrix& m) {
  IntMatrix p = m;
  for (Int k = 1; k <= 12; ++k, p = p * m)
    if (p.isIdentity()) return k;
  throw Error(ErrorCode::InvalidData, "lattice generator has no finite order <= 12");
}

Outcome checkLattice(const LatticeAction& l, json& w) {
  Int m = 1;
  for (Int o : l.orders) m = lcm(m, o);
  const auto co = coinvariants(l);
  const auto f = fixedTorusCharacters(l, m);
  w["coinvariants"] = co.toJson();
  w["level"] = m;
  w["points"] = {f.pointsAtLevel, f.pointsAtDoubleLevel};
  return passIf(f.matches, w);
}

Outcome suiteCoinvariants(const Ctx& c) {
  if (!c.spec.gamma.lattice.empty()) {
    LatticeAction l{c.spec.gamma.lattice.front().rows(), c.spec.gamma.lattice, {}};
    for (const auto& g : l.generators) l.orders.push_back(matrixOrder(g));
    validateLatticeAction(l);
    json w = json::object();
    return checkLattice(l, w);
  }
  std::mt19937_64 rng(c.seed);
  for (std::size_t k = 0; k < c.spec.data.instances; ++k) {
    const Int order = c.spec.gamma.order == 2 || c.spec.gamma.order == 3 ? static_cast<Int>(c.spec.gamma.order)
                                                                          : (k % 2 ? 3 : 2);
    const LatticeAction l = randomLatticeAction(1 + rng() % 3, order, rng);
    json w{{"instance", k}, {"generator", l.generators.front().str()}};
    auto o = checkLattice(l, w);
    if (o.status != CheckStatus::Pass) return o;
  }
  return {CheckStatus::Pass, {{"instances", c.spec.data.instances}}};
}

const std::map<std::string, std::function<Outcome(const Ctx&)>>& registry() {
  static const std::map<std::string, std::function<Outcome(const Ctx&)>> r{
      {"tits-welldef", suiteTitsWelldef},
      {"inverse-section", suiteInverseSection},
      {"chevalley", suiteChevalley},
      {"fixedgroup", suiteFixedgroup},
      {"orbit-minus-one", suiteOrbitMinusOne},
      {"splcng", suiteSplcng},
      {"chiinv", suiteChiInv},
      {"fourier", suiteFourier},
      {"whittaker-shift", suiteWhittaker},
      {"contragredient-shift", suiteContragredient},
      {"coinvariants", suiteCoinvariants},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"tits-welldef",    "inverse-section", "chevalley",
                                              "fixedgroup",      "orbit-minus-one", "splcng",
                                              "chiinv",          "fourier",         "whittaker-shift",
                                              "contragredient-shift", "coinvariants"};
  return names;
}

SuiteSpec parseSuiteSpec(const json& j) {
  requireKeys(j, "spec", kTopKeys);
  SuiteSpec s;
  s.canonical = j;

  if (!j.contains("suites") || !j.at("suites").is_array() || j.at("suites").empty())
    bad("suites must be a non-empty list");
  std::set<std::string> seen;
  for (const auto& v : j.at("suites")) {
    if (!v.is_string()) bad("suite names must be strings");
    const auto name = v.get<std::string>();
    if (!registry().count(name)) bad("unknown suite '" + name + "'");
    if (!seen.insert(name).second) bad("suite '" + name + "' listed twice");
    s.suites.push_back(name);
  }

  if (j.contains("group")) {
    const json& g = j.at("group");
    requireKeys(g, "group", {"type", "rank", "isogeny"});
    SuiteSpec::Group grp;
    std::string type = field<std::string>(g, "type", "group", "");
    if (type.empty()) bad("group.type is required");
    int rank = field<int>(g, "rank", "group", 0);
    const auto digits = type.find_first_of("0123456789");
    if (digits != std::string::npos) {
      const int labelled = std::stoi(type.substr(digits));
      if (rank != 0 && rank != labelled) bad("group.rank disagrees with group.type");
      rank = labelled;
      type = type.substr(0, digits);
    }
    grp.family = type;
    grp.rank = rank;
    try {
      grp.isogeny = parseIsogeny(field<std::string>(g, "isogeny", "group", "sc"));
      buildFromType(grp.family, grp.rank, grp.isogeny);
    } catch (const Error& e) {
      bad(std::string("group: ") + e.what());
    }
    s.group = grp;
  } else {
    for (const auto& n : s.suites)
      if (needsGroup(n)) bad("suite '" + n + "' needs a group");
  }

  if (j.contains("theta")) s.theta = oneBasedList(j.at("theta"), "theta");

  if (j.contains("gamma")) {
    const json& g = j.at("gamma");
    requireKeys(g, "gamma", {"order", "weyl", "theta", "lattice"});
    s.gamma.order = field<std::size_t>(g, "order", "gamma", 1);
    if (s.gamma.order < 1 || s.gamma.order > 12) bad("gamma.order must lie in 1..12");
    if (g.contains("weyl")) s.gamma.weyl = oneBasedList(g.at("weyl"), "gamma.weyl");
    if (g.contains("theta")) s.gamma.theta = oneBasedList(g.at("theta"), "gamma.theta");
    if (g.contains("lattice")) {
      if (!g.at("lattice").is_array()) bad("gamma.lattice must be a list of matrices");
      for (const auto& m : g.at("lattice")) s.gamma.lattice.push_back(matrixFromJson(m, "gamma.lattice"));
      for (const auto& m : s.gamma.lattice)
        if (m.rows() != s.gamma.lattice.front().rows()) bad("gamma.lattice matrices differ in size");
    }
  }

  if (j.contains("coeff")) {
    const json& c = j.at("coeff");
    requireKeys(c, "coeff", {"N", "symbols", "zetaMultiplier", "symbolImages"});
    s.coeff.n = field<Int>(c, "N", "coeff", 24);
    if (s.coeff.n < 1) bad("coeff.N must be positive");
    s.coeff.symbols = field<std::vector<std::string>>(c, "symbols", "coeff", {});
    s.coeff.zetaMultiplier = field<Int>(c, "zetaMultiplier", "coeff", 1);
    if (c.contains("symbolImages")) {
      if (!c.at("symbolImages").is_object()) bad("coeff.symbolImages must be an object");
      for (const auto& [k, v] : c.at("symbolImages").items()) s.coeff.symbolImages[k] = v;
    }
  }

  if (j.contains("data")) {
    const json& d = j.at("data");
    requireKeys(d, "data", {"random", "seed", "instances", "adata", "scaling"});
    s.data.seed = field<std::uint64_t>(d, "seed", "data", 0);
    s.data.instances = field<std::size_t>(d, "instances", "data", 50);
    if (d.contains("adata")) s.data.adata = d.at("adata");
    if (d.contains("scaling")) s.data.scaling = d.at("scaling");
    s.data.random = field<bool>(d, "random", "data", !s.data.adata.has_value());
    if (!s.data.random && !s.data.adata) bad("data.adata is required when data.random is false");
  }

  if (j.contains("convention")) {
    const auto c = field<std::string>(j, "convention", "spec", "");
    if (c == "inverse-inversion-set")
      s.convention = InversionConvention::InverseInversionSet;
    else if (c == "literal")
      s.convention = InversionConvention::Literal;
    else
      bad("convention must be 'inverse-inversion-set' or 'literal'");
  }

  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    requireKeys(b, "bounds", {"weylCap", "searchDepth", "orderBound"});
    s.bounds.weylCap = field<std::size_t>(b, "weylCap", "bounds", 10000);
    s.bounds.searchDepth = field<int>(b, "searchDepth", "bounds", 4);
    s.bounds.orderBound = field<Int>(b, "orderBound", "bounds", 4);
    if (s.bounds.searchDepth < 0 || s.bounds.orderBound < 1) bad("bounds must be positive");
  }

  if (std::find(s.suites.begin(), s.suites.end(), "fixedgroup") != s.suites.end() && !s.theta && !s.gamma.theta)
    bad("suite 'fixedgroup' needs theta");
  return s;
}

json tomlToJson(std::string_view text) {
  try {
    const toml::table t = toml::parse(text);
    std::ostringstream os;
    os << toml::json_formatter{t};
    return json::parse(os.str());
  } catch (const toml::parse_error& e) {
    bad(std::string("TOML: ") + std::string(e.description()));
  }
}

SuiteSpec loadSuiteSpec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  if (path.extension() == ".toml") return parseSuiteSpec(tomlToJson(ss.str()));
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    bad(std::string("JSON: ") + e.what());
  }
  return parseSuiteSpec(j);
}

std::string specHash(const SuiteSpec& spec) { return hexSha256(spec.canonical.dump()); }

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

int Report::exitCode() const {
  return std::any_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == CheckStatus::Fail; })
             ? 1
             : 0;
}

json Report::toJson() const {
  json recs = json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : records) {
    recs.push_back({{"id", r.id}, {"suite", r.suite}, {"status", to_string(r.status)}, {"witness", r.witness},
                    {"runtimeMs", r.runtimeMs}});
    (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : skipped)++;
  }
  return {{"tool", "lgk"},
          {"toolVersion", std::string(version())},
          {"seed", seed},
          {"specHash", specHash},
          {"records", recs},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

Report runSuite(const SuiteSpec& spec, const RunOptions& opts) {
  Report rep;
  rep.seed = opts.seed.value_or(spec.data.seed);
  rep.specHash = specHash(spec);
  const Ctx ctx{spec, rep.seed};
  for (const auto& name : spec.suites) {
    CheckRecord rec;
    rec.id = name;
    rec.suite = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = registry().at(name)(ctx);
      rec.status = o.status;
      rec.witness = std::move(o.witness);
    } catch (const Error& e) {
      rec.status = e.code() == ErrorCode::InvalidType ? CheckStatus::Skipped : CheckStatus::Fail;
      rec.witness = {{"error", e.what()}};
    } catch (const std::exception& e) {
      rec.status = CheckStatus::Fail;
      rec.witness = {{"error", e.what()}};
    }
    if (!rec.witness.is_object()) rec.witness = {{"value", rec.witness}};
    rec.witness["seed"] = rep.seed;
    if (opts.timings)
      rec.runtimeMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.records.push_back(std::move(rec));
  }
  std::sort(rep.records.begin(), rep.records.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  return rep;
}

}  // namespace lgk
