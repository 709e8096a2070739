#include "lgk/chevalley.hpp"

#include "lgk/error.hpp"

namespace lgk {

namespace {

std::optional<Int> zetaExponent(const Cyc& x) {
  const Int n = x.field()->order();
  for (Int k = 0; k < n; ++k)
    if (Cyc::zeta(x.field(), k) == x) return k;
  return std::nullopt;
}

// Lexicographically least a in [0,n)^r with <rows_i, a> = targets_i mod n,
// and the number of solutions.
std::pair<std::optional<IntVec>, std::size_t> solveModN(const std::vector<IntVec>& rows, const IntVec& targets,
                                                        std::size_t r, Int n) {
  double space = 1;
  for (std::size_t j = 0; j < r; ++j) space *= static_cast<double>(n);
  if (space > 5e7) throw Error(ErrorCode::ConstructionFailure, "torus search space too large");
  std::optional<IntVec> first;
  std::size_t count = 0;
  IntVec a(r, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i) ok = floorMod(dot(rows[i], a) - targets[i], n) == 0;
    if (ok) {
      if (!first) first = a;
      ++count;
    }
    std::size_t j = r;
    while (j > 0) {
      --j;
      if (++a[j] < n) break;
      a[j] = 0;
      if (j == 0) return {first, count};
    }
    if (r == 0) return {first, count};
  }
}

TorusPoint zetaPoint(const DatumPtr& d, const IntVec& a, Int n) {
  std::vector<KElem> c;
  for (Int x : a) c.emplace_back(n, x);
  return TorusPoint(d, std::move(c));
}

}  // namespace

ChevalleyInvolution buildChevalley(const DatumPtr& d, Int n) {
  ChevalleyInvolution c;
  c.datum_ = d;
  c.order_ = n;
  c.w0_ = longestElement(d);
  const std::size_t r = d->semisimpleRank();

  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto idx = d->rootIndex(-c.w0_.actChar(d->root(i)));
    if (!idx || *idx >= r) throw Error(ErrorCode::ConstructionFailure, "-w0 does not permute the simple roots");
    perm[i] = *idx;
  }
  c.diagram_ = PinnedAutomorphism::fromPermutation(d, perm);
  c.action_ = std::make_shared<AdjointAction>(d, n);

  const MatrixModel& m = c.action_->typeModel();
  const FieldMatrix big = m.wordMatrix(c.w0_.word());
  FieldMatrix bigInv = FieldMatrix::identity(m.field(), m.dim());
  for (auto k = c.w0_.word().rbegin(); k != c.w0_.word().rend(); ++k) bigInv = bigInv * m.nInverse(*k);

  std::vector<IntVec> rows;
  IntVec targets;
  for (std::size_t i = 0; i < r; ++i) {
    Cyc lambda;
    if (!proportional(big * m.X(perm[i]) * bigInv, m.Y(i), &lambda))
      throw Error(ErrorCode::ConstructionFailure, "Ad(n(w0)) does not map root vectors to opposite root vectors");
    auto k = zetaExponent(lambda);
    if (!k) throw Error(ErrorCode::ConstructionFailure, "alignment scalar is not a root of unity");
    c.eps_.push_back(*k);
    rows.push_back(d->root(perm[i]));
    targets.push_back(-*k);
  }
  auto [sol, count] = solveModN(rows, targets, d->rank(), n);
  if (!sol) throw Error(ErrorCode::ConstructionFailure, "no torus correction in (mu_N)^rank");
  c.t0_ = zetaPoint(d, *sol, n);
  c.t0Count_ = count;
  c.lie_ = c.action_->weyl(c.w0_) * c.action_->torus(c.t0_) * c.action_->diagram(perm);
  return c;
}

ExtWeylElem ChevalleyInvolution::apply(const ExtWeylElem& x) const {
  requireSameDatum(x.datum(), datum_);
  const ExtWeylElem tinv = ExtWeylElem::torus(x.torusPart().inverse());
  return tinv * titsSection(x.weylPart().inverse(), x.modulus()).inverse();
}

IntMatrix ChevalleyInvolution::latticeMap() const {
  return w0_.charMatrix() * diagram_.charMap();
}

LElement applyLC(const ChevalleyInvolution& c, const LElement& x) { return {c.apply(x.g), x.sigma}; }

ExtWeylElem tElement(const DatumPtr& d, Int n, bool negativeRoot) {
  KElem root = KElem::i(n);
  if (negativeRoot) root = root.inverse();
  return ExtWeylElem::torus(tPoint(d, root));
}

bool ChevalleyReport::allOk() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

nlohmann::json ChevalleyReport::toJson() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : checks) j.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  nlohmann::json out{{"checks", j}};
  if (squareWitness) out["squareWitness"] = lgk::toJson(*squareWitness);
  return out;
}

ChevalleyReport verifyChevalley(const ChevalleyInvolution& c) {
  ChevalleyReport rep;
  const DatumPtr& d = c.datum();
  const AdjointAction& act = c.action();
  const LieModel& lie = act.lie();
  const MatrixModel& m = act.typeModel();
  const LieMap& cm = c.lieMap();
  const std::size_t r = d->semisimpleRank();
  const Int n = c.modulus();

  {
    ChevalleyCheck k{"opposite-pinning", true, ""};
    for (std::size_t i = 0; i < r && k.ok; ++i) {
      if (!(lie.apply(cm, m.X(i)) == m.Y(i))) {
        k.ok = false;
        k.detail = "X_" + std::to_string(i + 1) + " not sent to X_-" + std::to_string(i + 1);
      } else if (!(lie.apply(cm, m.H(i)) == m.H(i) * Cyc(m.field(), -1))) {
        k.ok = false;
        k.detail = "H_" + std::to_string(i + 1) + " not negated";
      }
    }
    rep.checks.push_back(k);
  }
  {
    ChevalleyCheck k{"commutes-with-diagram-automorphisms", true, ""};
    std::size_t count = 0;
    for (const auto& p : diagramAutomorphisms(*d)) {
      const LieMap theta = act.diagram(p);
      ++count;
      if (!(cm * theta == theta * cm)) {
        k.ok = false;
        k.detail = "fails for node permutation " + nlohmann::json(p).dump();
        break;
      }
    }
    if (k.ok) k.detail = std::to_string(count) + " automorphisms";
    rep.checks.push_back(k);
  }
  {
    IntMatrix minusW0 = IntMatrix(d->rank(), d->rank()) - c.longest().charMatrix();
    ChevalleyCheck k{"lattice-part", c.diagramPart().charMap() == minusW0, ""};
    if (!k.ok) k.detail = "diagram part " + c.diagramPart().charMap().str() + " vs " + minusW0.str();
    const IntMatrix full = c.latticeMap();
    if (!(full == IntMatrix(d->rank(), d->rank()) - IntMatrix::identity(d->rank()))) {
      k.ok = false;
      k.detail += " full lattice map is not -1";
    }
    rep.checks.push_back(k);
  }
  {
    ChevalleyCheck k{"torus-inversion", true, ""};
    IntVec a(d->rank());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = static_cast<Int>(j + 1);
    const TorusPoint t = zetaPoint(d, a, n);
    k.ok = cm * act.torus(t) == act.torus(c.applyTorus(t)) * cm;
    if (!k.ok) k.detail = "C Ad(t) != Ad(t^-1) C";
    rep.checks.push_back(k);
  }
  {
    ChevalleyCheck k{"symbolic-agreement", true, ""};
    std::vector<WeylElem> sample{c.longest()};
    for (std::size_t i = 0; i < r; ++i) sample.push_back(WeylElem::reflection(d, i));
    for (const auto& w : sample) {
      const ExtWeylElem x = titsSection(w, n);
      if (!(cm * act.ext(x) == act.ext(c.apply(x)) * cm)) {
        k.ok = false;
        k.detail = "mismatch at word " + wordToJson(w.word()).dump();
        break;
      }
    }
    rep.checks.push_back(k);
  }
  {
    ChevalleyCheck k{"square-inner", false, ""};
    const LieMap sq = cm * cm;
    std::vector<IntVec> rows;
    IntVec targets;
    bool diagonal = true;
    for (std::size_t i = 0; i < r && diagonal; ++i) {
      Cyc lambda;
      if (!proportional(lie.apply(sq, m.X(i)), m.X(i), &lambda)) {
        diagonal = false;
        break;
      }
      auto e = zetaExponent(lambda);
      if (!e) {
        diagonal = false;
        break;
      }
      rows.push_back(d->root(i));
      targets.push_back(*e);
    }
    if (diagonal) {
      auto [sol, count] = solveModN(rows, targets, d->rank(), n);
      if (sol) {
        const TorusPoint x = zetaPoint(d, *sol, n);
        if (sq == act.torus(x)) {
          k.ok = true;
          rep.squareWitness = x;
          k.detail = std::to_string(count) + " torus witnesses";
        }
      }
    }
    if (!k.ok) k.detail = "no torus element x with C^2 = Ad(x)";
    rep.checks.push_back(k);
  }
  return rep;
}

}  // namespace lgk
