#include "lgk/endofourier.hpp"

#include <algorithm>
#include <numeric>

#include "lgk/error.hpp"

namespace lgk {

FinAbGroup::FinAbGroup(std::vector<Int> factors) {
  for (Int d : factors) {
    if (d < 1) throw Error(ErrorCode::InvalidData, "invariant factors must be positive");
    if (d > 1) factors_.push_back(d);
  }
  for (std::size_t i = 1; i < factors_.size(); ++i)
    if (factors_[i] % factors_[i - 1] != 0) throw Error(ErrorCode::InvalidData, "invariant factors must form a divisibility chain");
  for (Int d : factors_) {
    order_ *= static_cast<std::size_t>(d);
    exponent_ = lcm(exponent_, d);
  }
  field_ = CyclotomicField::get(lcm(exponent_, 2));
}

IntVec FinAbGroup::element(std::size_t index) const {
  IntVec e(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    e[i] = static_cast<Int>(index % static_cast<std::size_t>(factors_[i]));
    index /= static_cast<std::size_t>(factors_[i]);
  }
  return e;
}

std::size_t FinAbGroup::index(const IntVec& e) const {
  if (e.size() != factors_.size()) throw Error(ErrorCode::DimensionMismatch, "group element length");
  std::size_t k = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    k = k * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(floorMod(e[i], factors_[i]));
  return k;
}

IntVec FinAbGroup::normalize(const IntVec& a) const {
  if (a.size() != factors_.size()) throw Error(ErrorCode::DimensionMismatch, "group element length");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = floorMod(a[i], factors_[i]);
  return out;
}

IntVec FinAbGroup::add(const IntVec& a, const IntVec& b) const { return normalize(a + b); }
IntVec FinAbGroup::negate(const IntVec& a) const { return normalize(-a); }

std::vector<FinAbGroup> abelianGroupsUpTo(std::size_t maxOrder) {
  std::vector<std::vector<Int>> chains{{}};
  std::vector<FinAbGroup> out;
  out.emplace_back(std::vector<Int>{});
  for (std::size_t k = 0; k < chains.size(); ++k) {
    const std::vector<Int> base = chains[k];
    Int order = 1;
    for (Int d : base) order *= d;
    const Int last = base.empty() ? 1 : base.back();
    for (Int d = std::max<Int>(2, last); order * d <= static_cast<Int>(maxOrder); d += last) {
      if (d % last != 0) continue;
      auto next = base;
      next.push_back(d);
      chains.push_back(next);
      out.emplace_back(next);
    }
  }
  return out;
}

std::size_t characterIndex(const FinAbGroup& g, const Character& chi) { return g.index(chi.exponents); }
Character characterAt(const FinAbGroup& g, std::size_t index) { return {g.element(index)}; }

Int characterValueExponent(const FinAbGroup& g, const Character& chi, const IntVec& x) {
  if (chi.exponents.size() != g.rank()) throw Error(ErrorCode::InvalidCharacter, "character has the wrong length");
  const Int l = g.exponent();
  Int k = 0;
  for (std::size_t i = 0; i < g.rank(); ++i)
    k = floorMod(k + floorMod(chi.exponents[i] * x[i], g.factors()[i]) * (l / g.factors()[i]), l);
  return k;
}

Cyc characterValue(const FinAbGroup& g, const Character& chi, const IntVec& x) {
  const Int f = g.field()->order();
  return Cyc::zeta(g.field(), characterValueExponent(g, chi, x) * (f / g.exponent()));
}

Character multiply(const FinAbGroup& g, const Character& a, const Character& b) {
  return {g.add(a.exponents, b.exponents)};
}

Character conjugate(const FinAbGroup& g, const Character& a) { return {g.negate(a.exponents)}; }

PacketTable::PacketTable(FinAbGroup g, std::vector<std::string> labels, std::vector<std::size_t> labelOfCharacter)
    : group_(std::move(g)), labels_(std::move(labels)), labelOf_(std::move(labelOfCharacter)) {
  const std::size_t n = group_.order();
  if (labels_.size() != n || labelOf_.size() != n)
    throw Error(ErrorCode::InvalidData, "packet table needs one label per character");
  charOf_.assign(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (labelOf_[k] >= n || charOf_[labelOf_[k]] != n) throw Error(ErrorCode::InvalidData, "labelling is not a bijection");
    charOf_[labelOf_[k]] = k;
  }
  const Int scale = group_.field()->order() / group_.exponent();
  pairing_.assign(n, std::vector<Cyc>(n));
  exps_.assign(n, std::vector<Int>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t l = 0; l < n; ++l) {
      exps_[s][l] = characterValueExponent(group_, characterAt(group_, charOf_[l]), group_.element(s)) * scale;
      pairing_[s][l] = Cyc::zeta(group_.field(), exps_[s][l]);
    }
}

PacketTable PacketTable::random(FinAbGroup g, std::mt19937_64& rng) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("pi" + std::to_string(k));
  return PacketTable(std::move(g), std::move(labels), std::move(perm));
}

std::optional<std::string> PacketTable::checkOrthogonality() const {
  const std::size_t n = size();
  const FieldPtr& f = group_.field();
  CycAccumulator acc(f);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      acc.clear();
      for (std::size_t s = 0; s < n; ++s) acc.addZeta(1, exps_[s][a] - exps_[s][b]);
      if (!(acc.reduce() == Cyc(f, a == b ? static_cast<long>(n) : 0)))
        return "columns " + labels_[a] + " and " + labels_[b] + " are not orthogonal";
    }
  return std::nullopt;
}

nlohmann::json PacketTable::toJson() const {
  nlohmann::json pairing = nlohmann::json::array();
  for (const auto& row : pairing_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.str());
    pairing.push_back(r);
  }
  return {{"factors", group_.factors()}, {"labels", labels_}, {"pairing", pairing}};
}

std::vector<Cyc> fourierInvert(const PacketTable& t, const std::vector<Cyc>& stable) {
  const std::size_t n = t.size();
  if (stable.size() != n) throw Error(ErrorCode::DimensionMismatch, "stable vector length differs from group order");
  const FieldPtr& f = t.group().field();
  const mpq_class inv(1, static_cast<unsigned long>(n));
  std::vector<Cyc> out;
  CycAccumulator acc(f);
  for (std::size_t l = 0; l < n; ++l) {
    acc.clear();
    for (std::size_t s = 0; s < n; ++s) acc.addShifted(stable[s], -t.pairingExponent(s, l));
    out.push_back(acc.reduce() * inv);
  }
  return out;
}

std::vector<Cyc> fourierForward(const PacketTable& t, const std::vector<Cyc>& theta) {
  const std::size_t n = t.size();
  if (theta.size() != n) throw Error(ErrorCode::DimensionMismatch, "character vector length differs from group order");
  std::vector<Cyc> out;
  CycAccumulator acc(t.group().field());
  for (std::size_t s = 0; s < n; ++s) {
    acc.clear();
    for (std::size_t l = 0; l < n; ++l) acc.addShifted(theta[l], t.pairingExponent(s, l));
    out.push_back(acc.reduce());
  }
  return out;
}

namespace {

std::vector<Cyc> testVector(const FieldPtr& f, std::size_t n) {
  std::vector<Cyc> v;
  for (std::size_t k = 0; k < n; ++k) v.emplace_back(f, mpq_class(static_cast<long>(k * k + 3 * k + 1)));
  return v;
}

void requireCharacter(const FinAbGroup& g, const Character& c) {
  if (c.exponents.size() != g.rank()) throw Error(ErrorCode::InvalidCharacter, "character has the wrong length");
}

// Character determined by its values on all elements (given as exponents).
Character characterFromValues(const FinAbGroup& g, const std::vector<Int>& valueExp) {
  Character c;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    IntVec e(g.rank(), 0);
    e[i] = 1;
    const Int step = g.exponent() / g.factors()[i];
    c.exponents.push_back(valueExp[g.index(e)] / step);
  }
  return c;
}

}  // namespace

LabelShift whittakerShift(const PacketTable& t, const Character& eta) {
  const FinAbGroup& g = t.group();
  requireCharacter(g, eta);
  const std::size_t n = t.size();
  const Character etaInv = conjugate(g, eta);
  LabelShift out;
  out.perm.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.perm[t.labelOf(k)] = t.labelOf(characterIndex(g, multiply(g, characterAt(g, k), etaInv)));

  const auto theta = testVector(g.field(), n);
  auto stable = fourierForward(t, theta);
  const Int scale = g.field()->order() / g.exponent();
  CycAccumulator acc(g.field());
  for (std::size_t s = 0; s < n; ++s) {
    acc.clear();
    acc.addShifted(stable[s], characterValueExponent(g, eta, g.element(s)) * scale);
    stable[s] = acc.reduce();
  }
  const auto shifted = fourierInvert(t, stable);
  out.verified = true;
  for (std::size_t l = 0; l < n; ++l)
    if (!(shifted[l] == theta[out.perm[l]])) out.verified = false;
  return out;
}

GroupAutomorphism identityAutomorphism(const FinAbGroup& g) {
  GroupAutomorphism a;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    IntVec e(g.rank(), 0);
    e[i] = 1;
    a.images.push_back(e);
  }
  return a;
}

GroupAutomorphism inversionAutomorphism(const FinAbGroup& g) {
  GroupAutomorphism a = identityAutomorphism(g);
  for (auto& v : a.images) v = g.negate(v);
  return a;
}

IntVec applyAutomorphism(const FinAbGroup& g, const GroupAutomorphism& a, const IntVec& x) {
  IntVec out(g.rank(), 0);
  for (std::size_t i = 0; i < g.rank(); ++i) out = out + x[i] * a.images[i];
  return g.normalize(out);
}

void requireAutomorphism(const FinAbGroup& g, const GroupAutomorphism& a) {
  if (a.images.size() != g.rank()) throw Error(ErrorCode::NotAutomorphism, "one image per generator required");
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (a.images[i].size() != g.rank()) throw Error(ErrorCode::NotAutomorphism, "image has the wrong length");
    if (!isZero(g.normalize(g.factors()[i] * a.images[i])))
      throw Error(ErrorCode::NotAutomorphism, "image of generator " + std::to_string(i) + " has the wrong order");
  }
  std::vector<bool> hit(g.order(), false);
  for (std::size_t s = 0; s < g.order(); ++s) {
    const std::size_t k = g.index(applyAutomorphism(g, a, g.element(s)));
    if (hit[k]) throw Error(ErrorCode::NotAutomorphism, "map is not injective");
    hit[k] = true;
  }
}

GroupAutomorphism randomAutomorphism(const FinAbGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    GroupAutomorphism a;
    for (std::size_t i = 0; i < g.rank(); ++i) a.images.push_back(g.element(pick(rng)));
    try {
      requireAutomorphism(g, a);
      return a;
    } catch (const Error&) {
    }
  }
  return identityAutomorphism(g);
}

GroupAutomorphism composeAutomorphisms(const FinAbGroup& g, const GroupAutomorphism& a, const GroupAutomorphism& b) {
  GroupAutomorphism out;
  for (const auto& v : b.images) out.images.push_back(applyAutomorphism(g, a, v));
  return out;
}

namespace {

std::vector<std::size_t> inverseTable(const FinAbGroup& g, const GroupAutomorphism& a) {
  std::vector<std::size_t> inv(g.order());
  for (std::size_t s = 0; s < g.order(); ++s) inv[g.index(applyAutomorphism(g, a, g.element(s)))] = s;
  return inv;
}

}  // namespace

LabelShift contragredientShift(const PacketTable& t, const GroupAutomorphism& a) {
  const FinAbGroup& g = t.group();
  requireAutomorphism(g, a);
  const std::size_t n = t.size();
  const auto inv = inverseTable(g, a);
  LabelShift out;
  out.perm.resize(n);
  std::vector<Character> images(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Character rho = characterAt(g, k);
    std::vector<Int> vals(n);
    for (std::size_t s = 0; s < n; ++s)
      vals[s] = floorMod(-characterValueExponent(g, rho, g.element(inv[s])), g.exponent());
    images[k] = characterFromValues(g, vals);
    out.perm[t.labelOf(k)] = t.labelOf(characterIndex(g, images[k]));
  }

  const auto v = testVector(g.field(), n);
  out.verified = true;
  for (std::size_t k = 0; k < n && out.verified; ++k) {
    CycAccumulator lhs(g.field()), rhs(g.field());
    const Character rho = characterAt(g, k);
    const Int scale = g.field()->order() / g.exponent();
    for (std::size_t s = 0; s < n; ++s) {
      const IntVec x = g.element(s);
      lhs.addShifted(v[g.index(applyAutomorphism(g, a, g.negate(x)))], characterValueExponent(g, rho, x) * scale);
      rhs.addShifted(v[s], characterValueExponent(g, images[k], x) * scale);
    }
    out.verified = lhs.reduce() == rhs.reduce();
  }
  return out;
}

std::vector<std::size_t> precomposeShift(const PacketTable& t, const GroupAutomorphism& b) {
  const FinAbGroup& g = t.group();
  requireAutomorphism(g, b);
  const std::size_t n = t.size();
  const auto inv = inverseTable(g, b);
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Int> vals(n);
    for (std::size_t s = 0; s < n; ++s) vals[s] = characterValueExponent(g, characterAt(g, k), g.element(inv[s]));
    perm[t.labelOf(k)] = t.labelOf(characterIndex(g, characterFromValues(g, vals)));
  }
  return perm;
}

void validateLatticeAction(const LatticeAction& l) {
  if (l.generators.size() != l.orders.size()) throw Error(ErrorCode::InvalidData, "one order per generator required");
  for (std::size_t k = 0; k < l.generators.size(); ++k) {
    const IntMatrix& g = l.generators[k];
    if (g.rows() != l.rank || g.cols() != l.rank) throw Error(ErrorCode::InvalidData, "generator has the wrong size");
    if (l.orders[k] < 1 || !power(g, l.orders[k]).isIdentity())
      throw Error(ErrorCode::InvalidData, "generator " + std::to_string(k) + " does not have the stated order");
  }
}

Int CoinvariantsResult::torsionOrder() const {
  Int t = 1;
  for (Int d : torsion) t *= d;
  return t;
}

nlohmann::json CoinvariantsResult::toJson() const { return {{"torsion", torsion}, {"freeRank", freeRank}}; }

CoinvariantsResult coinvariants(const LatticeAction& l) {
  validateLatticeAction(l);
  CoinvariantsResult out;
  out.freeRank = l.rank;
  if (l.generators.empty() || l.rank == 0) return out;
  IntMatrix stacked(l.rank, l.rank * l.generators.size());
  for (std::size_t k = 0; k < l.generators.size(); ++k) {
    const IntMatrix d = l.generators[k] - IntMatrix::identity(l.rank);
    for (std::size_t i = 0; i < l.rank; ++i)
      for (std::size_t j = 0; j < l.rank; ++j) stacked(i, k * l.rank + j) = d(i, j);
  }
  std::size_t nonzero = 0;
  for (Int d : smithNormalForm(stacked).diagonal()) {
    const Int a = d < 0 ? -d : d;
    if (a != 0) ++nonzero;
    if (a > 1) out.torsion.push_back(a);
  }
  out.freeRank = l.rank - nonzero;
  return out;
}

namespace {

std::size_t countFixed(const LatticeAction& l, Int m) {
  std::vector<IntMatrix> conds;
  for (const auto& g : l.generators) conds.push_back(g.transpose() - IntMatrix::identity(l.rank));
  std::size_t count = 0;
  IntVec t(l.rank, 0);
  for (;;) {
    bool ok = true;
    for (const auto& c : conds) {
      for (Int v : c.apply(t))
        if (floorMod(v, m) != 0) ok = false;
      if (!ok) break;
    }
    if (ok) ++count;
    std::size_t j = l.rank;
    while (j > 0 && ++t[j - 1] == m) t[--j] = 0;
    if (j == 0) break;
  }
  return count;
}

}  // namespace

FixedTorusCount fixedTorusCharacters(const LatticeAction& l, Int m) {
  if (m < 1) throw Error(ErrorCode::InvalidData, "level must be positive");
  const CoinvariantsResult co = coinvariants(l);
  for (Int d : co.torsion)
    if (m % d != 0)
      throw Error(ErrorCode::InconclusiveBound, "torsion factor " + std::to_string(d) + " does not divide " + std::to_string(m));
  FixedTorusCount r;
  r.level = m;
  r.pointsAtLevel = countFixed(l, m);
  r.pointsAtDoubleLevel = countFixed(l, 2 * m);
  std::size_t ratio = r.pointsAtDoubleLevel / r.pointsAtLevel;
  bool exact = r.pointsAtDoubleLevel % r.pointsAtLevel == 0;
  while (ratio > 1 && ratio % 2 == 0) {
    ratio /= 2;
    ++r.freeRank;
  }
  exact = exact && ratio == 1;
  Int mf = 1;
  for (std::size_t k = 0; k < r.freeRank; ++k) mf *= m;
  exact = exact && static_cast<Int>(r.pointsAtLevel) % mf == 0;
  r.componentCount = static_cast<Int>(r.pointsAtLevel) / mf;
  r.matches = exact && r.freeRank == co.freeRank && r.componentCount == co.torsionOrder();
  return r;
}

LatticeAction randomLatticeAction(std::size_t rank, Int order, std::mt19937_64& rng) {
  std::vector<IntMatrix> blocks;
  if (order == 2) {
    blocks = {IntMatrix(1, 1, {1}), IntMatrix(1, 1, {-1}), IntMatrix(2, 2, {0, 1, 1, 0})};
  } else if (order == 3) {
    blocks = {IntMatrix(1, 1, {1}), IntMatrix(2, 2, {0, -1, 1, -1}), IntMatrix(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0})};
  } else {
    throw Error(ErrorCode::InvalidData, "random lattice actions are available for Z/2 and Z/3");
  }
  IntMatrix b = IntMatrix::identity(rank);
  std::size_t pos = 0;
  while (pos < rank) {
    std::vector<const IntMatrix*> fit;
    for (const auto& blk : blocks)
      if (pos + blk.rows() <= rank) fit.push_back(&blk);
    const IntMatrix& blk = *fit[std::uniform_int_distribution<std::size_t>(0, fit.size() - 1)(rng)];
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) b(pos + i, pos + j) = blk(i, j);
    pos += blk.rows();
  }
  IntMatrix p = IntMatrix::identity(rank);
  std::uniform_int_distribution<std::size_t> idx(0, rank - 1);
  std::uniform_int_distribution<Int> coef(-2, 2);
  for (std::size_t step = 0; step < 2 * rank && rank > 1; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    IntMatrix e = IntMatrix::identity(rank);
    e(i, j) = coef(rng);
    p = e * p;
  }
  const IntMatrix pInv = *integerInverse(p);
  return {rank, {p * b * pInv}, {order}};
}

}  // namespace lgk
