// Acceptance runner: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lgk/chevalley.hpp"
#include "lgk/endofourier.hpp"
#include "lgk/error.hpp"
#include "lgk/fixedgroup.hpp"
#include "lgk/lembed.hpp"
#include "lgk/models.hpp"
#include "lgk/splitinv.hpp"

using namespace lgk;

namespace {

constexpr Int N = 24;
const std::vector<const char*> kSmallTypes{"A1", "A2", "A3", "B2", "C2"};

struct Verdict {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limitSec, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limitSec > 0 && sec > limitSec) {
    v.ok = false;
    v.detail += " (over the " + std::to_string(static_cast<int>(limitSec)) + " s limit)";
  }
  if (!v.ok) ++failures;
  std::printf("criterion %2d %-28s %s  %.2fs  %s\n", id, name.c_str(), v.ok ? "PASS" : "FAIL", sec, v.detail.c_str());
  std::fflush(stdout);
}

Verdict titsWelldef() {
  std::size_t elements = 0, words = 0, mismatches = 0;
  for (const char* t : kSmallTypes) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    const auto m = MatrixModel::realize(d, N);
    for (const auto& w : enumerateWeylGroup(d)) {
      ++elements;
      const auto n = titsSection(w, N);
      const auto mat = m.embedExt(n);
      for (const auto& word : reducedWords(w)) {
        ++words;
        if (!(wordProduct(d, word, N) == n) || !m.sameElement(m.wordMatrix(word), mat)) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(elements) + " elements, " + std::to_string(words) + " reduced words, " +
                               std::to_string(mismatches) + " mismatches"};
}

Verdict splcng() {
  const std::vector<const char*> types{"A2", "A3", "B2", "C2"};
  std::size_t pass = 0;
  std::string first;
  for (std::size_t k = 0; k < 100; ++k) {
    auto d = buildFromLabel(types[k % 4], Isogeny::SimplyConnected);
    const std::size_t order = (k / 4) % 2 ? 3 : 2;
    const auto inst = randomSplcngInstance(d, order, 20240 + k, N);
    if (verifySplcng(inst.torus, inst.a, inst.c).holds)
      ++pass;
    else if (first.empty())
      first = " first failure seed " + std::to_string(inst.seed);
  }
  return {pass == 100, std::to_string(pass) + "/100 pass" + first};
}

Verdict chiinv() {
  std::size_t trivialTypes = 0, cochains = 0, bad = 0;
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4"})
    for (auto iso : {Isogeny::SimplyConnected, Isogeny::Adjoint}) {
      auto d = buildFromLabel(t, iso);
      const auto s = TwistedTorusDatum::split(d, N);
      const auto r = trivialRCochain(s);
      ++trivialTypes;
      if (!verifyChiInv(buildChevalley(d, N), buildLEmbedding(s, r), buildLEmbedding(s, negateRCochain(r))).holds) ++bad;
    }
  std::size_t twists = 0;
  for (const char* t : {"A1", "A2"}) {
    auto d = dual(*buildFromLabel(t, Isogeny::SimplyConnected));
    const auto c = buildChevalley(d, N);
    for (const auto& s : cyclicTwists(d, 2, N)) {
      if (s.weylImage(1).isIdentity()) continue;
      ++twists;
      for (const auto& r : searchRCochains(s, 4)) {
        ++cochains;
        const auto res = verifyChiInv(c, buildLEmbedding(s, r), buildLEmbedding(s, negateRCochain(r)));
        if (!res.holds || !res.matrixChecked) ++bad;
      }
    }
  }
  return {bad == 0 && cochains > 0,
          std::to_string(trivialTypes) + " split data, " + std::to_string(twists) + " Weyl twists, " +
              std::to_string(cochains) + " cochains, " + std::to_string(bad) + " failures"};
}

Verdict inverseSection() {
  std::size_t checks = 0, bad = 0;
  for (const char* t : kSmallTypes) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    const auto m = MatrixModel::realize(d, N);
    for (const auto& w : enumerateWeylGroup(d))
      for (const KElem& root : {KElem::i(N), KElem::i(N).inverse()}) {
        ++checks;
        const auto r = inverseSectionIdentityCheck(w, root);
        if (!r.holds || !m.sameElement(m.embedExt(r.lhs), m.embedExt(r.rhs))) ++bad;
      }
  }
  return {bad == 0, std::to_string(checks) + " checks, " + std::to_string(bad) + " failures"};
}

Verdict chevalley() {
  std::size_t built = 0, bad = 0;
  std::string first;
  for (const char* t : {"A1", "A2", "A3", "B2", "C2", "D4"}) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    const auto c = buildChevalley(d, N);
    ++built;
    const auto rep = verifyChevalley(c);
    const bool lattice = c.diagramPart().charMap() == (IntMatrix(d->rank(), d->rank()) - c.longest().charMatrix()) &&
                         c.latticeMap() == (IntMatrix(d->rank(), d->rank()) - IntMatrix::identity(d->rank()));
    if (!rep.allOk() || !lattice) {
      ++bad;
      if (first.empty()) first = std::string(" first failure ") + t;
    }
  }
  return {bad == 0, std::to_string(built) + " types, " + std::to_string(bad) + " failures" + first};
}

Verdict fixedgroup() {
  std::ostringstream os;
  bool ok = true;
  {
    auto d = buildFromLabel("A3", Isogeny::SimplyConnected);
    const auto fd = buildFixedDatum(d, PinnedAutomorphism::fromPermutation(d, {2, 1, 0}));
    bool c1 = true;
    for (const auto& s : fd.simpleRoots()) c1 &= s.c == 1;
    const auto res = verifyChevalleyOnFixed(fd, buildChevalley(d, N));
    ok &= fd.restricted()->cartanMatrix() == cartanMatrixOfType("C", 2) && c1 && res.allOk();
    os << "A3 flip " << fd.type() << " b=" << nlohmann::json(res.exponents).dump();
  }
  {
    auto d = buildFromLabel("A2", Isogeny::SimplyConnected);
    const auto fd = buildFixedDatum(d, PinnedAutomorphism::fromPermutation(d, {1, 0}));
    const auto& s = fd.simpleRoots().at(0);
    const auto res = verifyChevalleyOnFixed(fd, buildChevalley(d, N));
    ok &= fd.simpleRoots().size() == 1 && s.c == 2 && dot(s.root, s.coroot) == 2 && res.allOk();
    os << "; A2 flip rank " << fd.simpleRoots().size() << " c=" << s.c << " b=" << nlohmann::json(res.exponents).dump();
  }
  {
    auto d = buildFromLabel("D4", Isogeny::SimplyConnected);
    const auto c = buildChevalley(d, N);
    for (const auto& p : diagramAutomorphisms(*d)) {
      const auto th = PinnedAutomorphism::fromPermutation(d, p);
      if (th.order() != 3) continue;
      const auto fd = buildFixedDatum(d, th);
      const auto res = verifyChevalleyOnFixed(fd, c);
      ok &= fd.type() == "G2" && res.allOk();
      os << "; D4 triality " << fd.type() << " b=" << nlohmann::json(res.exponents).dump();
      break;
    }
  }
  return {ok, os.str()};
}

Verdict fourier() {
  std::mt19937_64 rng(77);
  auto groups = abelianGroupsUpTo(64);
  groups.erase(groups.begin());
  std::size_t bad = 0;
  for (int k = 0; k < 50; ++k) {
    const auto t = PacketTable::random(groups[rng() % groups.size()], rng);
    const auto& g = t.group();
    std::vector<Cyc> stable;
    for (std::size_t s = 0; s < g.order(); ++s)
      stable.push_back(Cyc::zeta(g.field(), static_cast<Int>(rng() % g.field()->order())));
    if (t.checkOrthogonality() || !(fourierForward(t, fourierInvert(t, stable)) == stable)) ++bad;
  }
  for (int k = 0; k < 50; ++k) {
    const auto t = PacketTable::random(groups[rng() % groups.size()], rng);
    const auto& g = t.group();
    const Character a{g.element(rng() % g.order())}, b{g.element(rng() % g.order())};
    const auto pa = whittakerShift(t, a), pb = whittakerShift(t, b), pab = whittakerShift(t, multiply(g, a, b));
    bool ok = pa.verified && pb.verified && pab.verified;
    for (std::size_t l = 0; l < g.order(); ++l) ok &= pa.perm[pb.perm[l]] == pab.perm[l];
    if (!ok) ++bad;
  }
  for (int k = 0; k < 50; ++k) {
    const auto t = PacketTable::random(groups[rng() % groups.size()], rng);
    const auto& g = t.group();
    const auto a = randomAutomorphism(g, rng);
    const auto p = contragredientShift(t, a);
    const auto want = precomposeShift(t, composeAutomorphisms(g, a, a));
    bool ok = p.verified;
    for (std::size_t l = 0; l < g.order(); ++l) ok &= p.perm[p.perm[l]] == want[l];
    if (!ok) ++bad;
  }
  return {bad == 0, "150 instances, " + std::to_string(bad) + " failures"};
}

Verdict coinvariantsVsBruteForce() {
  std::mt19937_64 rng(31);
  std::size_t bad = 0;
  for (int k = 0; k < 50; ++k) {
    const Int order = k % 2 ? 3 : 2;
    const auto l = randomLatticeAction(1 + rng() % 3, order, rng);
    const auto f = fixedTorusCharacters(l, order);
    if (!f.matches || f.componentCount != coinvariants(l).torsionOrder()) ++bad;
  }
  return {bad == 0, "50 actions, " + std::to_string(bad) + " mismatches"};
}

Verdict orbitNegation() {
  std::size_t pairs = 0, bad = 0;
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"}) {
    auto d = buildFromLabel(t, Isogeny::SimplyConnected);
    for (const auto& p : diagramAutomorphisms(*d)) {
      ++pairs;
      if (!minusOnePreservesOrbits(*d, PinnedAutomorphism::fromPermutation(d, p)).holds) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " (type, theta) pairs, " + std::to_string(bad) + " failures"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

Verdict cliDeterminism() {
  const std::string cli = LGK_CLI_PATH;
  const std::filesystem::path fx = LGK_FIXTURE_DIR;
  const auto dir = std::filesystem::temp_directory_path() / ("lgk-accept-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json", b = dir / "b.json";
  const std::string spec = (fx / "full.toml").string();
  const int rc1 = run(cli + " verify --spec " + spec + " --seed 99 --out " + a.string());
  const int rc2 = run(cli + " verify --spec " + spec + " --seed 99 --out " + b.string());
  const int rcBad = run(cli + " verify --spec " + (fx / "unknown_suite.json").string() + " > /dev/null 2>&1");
  const int rcFail = run(cli + " verify --spec " + (fx / "failing.json").string() + " > /dev/null");
  const bool same = !slurp(a).empty() && slurp(a) == slurp(b);
  std::filesystem::remove_all(dir);
  std::ostringstream os;
  os << "identical=" << same << " exit(pass)=" << rc1 << "," << rc2 << " exit(malformed)=" << rcBad
     << " exit(failing)=" << rcFail;
  return {same && rc1 == 0 && rc2 == 0 && rcBad == 2 && rcFail == 1, os.str()};
}

}  // namespace

int main() {
  criterion(1, "tits-section", 10, titsWelldef);
  criterion(2, "splitting-invariant", 30, splcng);
  criterion(3, "chevalley-on-L-embedding", 60, chiinv);
  criterion(4, "inverse-section", 0, inverseSection);
  criterion(5, "chevalley-involution", 0, chevalley);
  criterion(6, "fixed-subgroup", 0, fixedgroup);
  criterion(7, "fourier-engine", 10, fourier);
  criterion(8, "coinvariants", 0, coinvariantsVsBruteForce);
  criterion(9, "orbit-negation", 0, orbitNegation);
  criterion(10, "cli-determinism", 0, cliDeterminism);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
