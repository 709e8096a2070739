#include "lgk/models.hpp"

#include "lgk/error.hpp"

namespace lgk {

namespace {

IntVec unitVec(std::size_t n, std::size_t i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

struct Layout {
  std::size_t dim = 0;
  std::size_t modelRank = 0;
  std::vector<IntVec> weights;
  std::vector<IntVec> roots;
  std::vector<IntVec> coroots;
  std::optional<IntMatrix> form;
};

// Weights e_0..e_{n-1}, [0], -e_{n-1}..-e_0 on the diagonal.
std::vector<IntVec> hyperbolicWeights(std::size_t n, bool odd) {
  std::vector<IntVec> w;
  for (std::size_t k = 0; k < n; ++k) w.push_back(unitVec(n, k));
  if (odd) w.emplace_back(n, 0);
  for (std::size_t k = n; k-- > 0;) w.push_back(-unitVec(n, k));
  return w;
}

IntMatrix antidiagonal(std::size_t dim, bool alternating) {
  IntMatrix j(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) j(k, dim - 1 - k) = (alternating && k >= dim / 2) ? -1 : 1;
  return j;
}

Layout layoutFor(const std::string& family, std::size_t n) {
  Layout l;
  auto chain = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) {
      l.roots.push_back(unitVec(l.modelRank, i) - unitVec(l.modelRank, i + 1));
      l.coroots.push_back(l.roots.back());
    }
  };
  if (family == "A") {
    l.dim = n + 1;
    l.modelRank = n + 1;
    for (std::size_t k = 0; k <= n; ++k) l.weights.push_back(unitVec(n + 1, k));
    chain(n);
  } else if (family == "B" && n >= 2) {
    l.dim = 2 * n + 1;
    l.modelRank = n;
    l.weights = hyperbolicWeights(n, true);
    chain(n - 1);
    l.roots.push_back(unitVec(n, n - 1));
    l.coroots.push_back(2 * unitVec(n, n - 1));
    l.form = antidiagonal(l.dim, false);
  } else if (family == "C" && n >= 2) {
    l.dim = 2 * n;
    l.modelRank = n;
    l.weights = hyperbolicWeights(n, false);
    chain(n - 1);
    l.roots.push_back(2 * unitVec(n, n - 1));
    l.coroots.push_back(unitVec(n, n - 1));
    l.form = antidiagonal(l.dim, true);
  } else if (family == "D" && n >= 3) {
    l.dim = 2 * n;
    l.modelRank = n;
    l.weights = hyperbolicWeights(n, false);
    chain(n - 1);
    l.roots.push_back(unitVec(n, n - 2) + unitVec(n, n - 1));
    l.coroots.push_back(l.roots.back());
    l.form = antidiagonal(l.dim, false);
  } else {
    throw Error(ErrorCode::InvalidType, "no matrix model for type " + family + std::to_string(n));
  }
  return l;
}

}  // namespace

MatrixModel MatrixModel::realize(DatumPtr d, Int n) {
  const std::size_t r = d->semisimpleRank();
  if (d->rank() != r) throw Error(ErrorCode::InvalidType, "matrix models need a semisimple datum");
  const Layout l = layoutFor(d->family(), r);

  MatrixModel m;
  m.datum_ = d;
  m.field_ = CyclotomicField::get(n);
  m.order_ = n;
  m.dim_ = l.dim;
  m.weights_ = l.weights;
  m.modelRoots_ = l.roots;
  const FieldPtr& f = m.field_;
  if (l.form) m.form_ = FieldMatrix::fromInt(f, *l.form);

  // Cocharacter embedding: datum coroot i -> model coroot i.
  std::vector<IntVec> dc;
  for (std::size_t i = 0; i < r; ++i) dc.push_back(d->coroot(i));
  auto dcInv = rationalInverse(toRational(IntMatrix::fromColumns(dc, r)));
  if (!dcInv) throw Error(ErrorCode::InvalidType, "coroots are not a rational basis");
  const IntMatrix mc = IntMatrix::fromColumns(l.coroots, l.modelRank);
  m.embed_ = IntMatrix(l.modelRank, r);
  for (std::size_t j = 0; j < r; ++j) {
    RatVec col(l.modelRank, 0);
    for (std::size_t i = 0; i < l.modelRank; ++i)
      for (std::size_t k = 0; k < r; ++k) col[i] += mpq_class(static_cast<long>(mc(i, k))) * (*dcInv)[k][j];
    bool integral = true;
    for (const auto& x : col) integral = integral && x.get_den() == 1;
    if (!integral && d->family() == "A") {
      // Projective model: shift by the scalar cocharacter.
      mpz_class whole;
      mpz_fdiv_q(whole.get_mpz_t(), col[0].get_num_mpz_t(), col[0].get_den_mpz_t());
      const mpq_class shift = col[0] - mpq_class(whole);
      for (auto& x : col) x -= shift;
      integral = true;
      for (const auto& x : col) integral = integral && x.get_den() == 1;
      m.projective_ = true;
    }
    if (!integral)
      throw Error(ErrorCode::InvalidType, "cocharacter lattice of " + d->label() + " " +
                                              std::string(to_string(d->isogeny())) + " has no matrix model here");
    for (std::size_t i = 0; i < l.modelRank; ++i) m.embed_(i, j) = col[i].get_num().get_si();
  }
  for (std::size_t i = 0; i < r; ++i)
    if (m.embed_.transpose().apply(l.roots[i]) != d->root(i))
      throw Error(ErrorCode::InvalidType, "model roots disagree with the datum");

  auto rootVector = [&](const IntVec& alpha) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < l.dim; ++a)
      for (std::size_t b = 0; b < l.dim; ++b)
        if (a != b && l.weights[a] - l.weights[b] == alpha) pairs.emplace_back(a, b);
    if (pairs.empty()) throw Error(ErrorCode::ConstructionFailure, "no root space");
    for (unsigned mask = 0; mask < (1u << (pairs.size() - 1)); ++mask) {
      FieldMatrix x(f, l.dim, l.dim);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const bool neg = p > 0 && ((mask >> (p - 1)) & 1u);
        x(pairs[p].first, pairs[p].second) = Cyc(f, neg ? -1 : 1);
      }
      if (m.inLieAlgebra(x)) return x;
    }
    throw Error(ErrorCode::ConstructionFailure, "no root vector in the Lie algebra");
  };

  for (std::size_t i = 0; i < r; ++i) {
    FieldMatrix h(f, l.dim, l.dim);
    for (std::size_t k = 0; k < l.dim; ++k) h(k, k) = Cyc(f, mpq_class(static_cast<long>(dot(l.weights[k], l.coroots[i]))));
    FieldMatrix x = rootVector(l.roots[i]);
    FieldMatrix y = rootVector(-l.roots[i]);
    Cyc lambda;
    if (!proportional(commutator(x, y), h, &lambda))
      throw Error(ErrorCode::ConstructionFailure, "[X, X_-] is not a multiple of H");
    y = y * lambda.inverse();
    const FieldMatrix ex = x.expNilpotent();
    const FieldMatrix exInv = (x * Cyc(f, -1)).expNilpotent();
    const FieldMatrix ey = y.expNilpotent();
    const FieldMatrix eyInv = (y * Cyc(f, -1)).expNilpotent();
    m.x_.push_back(x);
    m.y_.push_back(y);
    m.h_.push_back(h);
    m.n_.push_back(ex * eyInv * ex);
    m.nInv_.push_back(exInv * ey * exInv);
  }
  return m;
}

void MatrixModel::assign(const std::string& symbol, const Cyc& value) {
  if (value.isZero()) throw Error(ErrorCode::InvalidData, "symbol value must be nonzero");
  values_[symbol] = value;
}

Cyc MatrixModel::value(const KElem& k) const {
  if (order_ % k.modulus() != 0) throw Error(ErrorCode::InvalidData, "K order does not divide the field order");
  Cyc v = Cyc::zeta(field_, checkedMul(k.zeta(), order_ / k.modulus()));
  for (const auto& [s, e] : k.free()) {
    auto it = values_.find(s);
    if (it == values_.end()) throw Error(ErrorCode::UnassignedSymbol, "symbol '" + s + "' has no value");
    v = v * it->second.pow(e);
  }
  return v;
}

FieldMatrix MatrixModel::torusMatrix(const TorusPoint& t) const {
  requireSameDatum(t.datum(), datum_);
  const Int n = t.modulus();
  FieldMatrix out(field_, dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    KElem entry = KElem::one(n);
    for (std::size_t j = 0; j < t.coords().size(); ++j) {
      const Int e = dot(weights_[k], embed_.col(j));
      if (e != 0) entry = entry * t.coords()[j].pow(e);
    }
    out(k, k) = value(entry);
  }
  return out;
}

FieldMatrix MatrixModel::wordMatrix(const Word& w) const {
  FieldMatrix g = FieldMatrix::identity(field_, dim_);
  for (std::size_t i : w) g = g * n_.at(i);
  return g;
}

FieldMatrix MatrixModel::embedExt(const ExtWeylElem& e) const {
  return torusMatrix(e.torusPart()) * weylMatrix(e.weylPart());
}

bool MatrixModel::sameElement(const FieldMatrix& a, const FieldMatrix& b) const {
  if (!projective_) return a == b;
  return proportional(a, b);
}

bool MatrixModel::preservesForm(const FieldMatrix& g) const {
  if (!form_) return true;
  const FieldMatrix lhs = g.transpose() * *form_ * g;
  return projective_ ? proportional(lhs, *form_) : lhs == *form_;
}

bool MatrixModel::inLieAlgebra(const FieldMatrix& x) const {
  if (!form_) return true;
  return (x.transpose() * *form_ + *form_ * x).isZero();
}

Cyc MatrixModel::simpleRootValue(std::size_t i, const FieldMatrix& diag) const {
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      if (a != b && weights_[a] - weights_[b] == modelRoots_[i]) return diag(a, a) * diag(b, b).inverse();
  throw Error(ErrorCode::InvalidData, "simple root has no matrix position");
}

LieModel::LieModel(const MatrixModel& m) : model_(std::make_shared<const MatrixModel>(m)) {
  const std::size_t r = m.datum()->semisimpleRank();
  for (std::size_t i = 0; i < r; ++i) gens_.push_back(m.X(i));
  for (std::size_t i = 0; i < r; ++i) gens_.push_back(m.Y(i));

  const std::size_t len = m.dim() * m.dim();
  std::vector<std::vector<mpq_class>> echelon;
  std::vector<std::size_t> echelonPivot;
  auto flatten = [&](const FieldMatrix& x) {
    std::vector<mpq_class> v(len);
    for (std::size_t a = 0; a < m.dim(); ++a)
      for (std::size_t b = 0; b < m.dim(); ++b) {
        if (!x(a, b).isRational()) throw Error(ErrorCode::ConstructionFailure, "pinning is not rational");
        v[a * m.dim() + b] = x(a, b).coeffs()[0];
      }
    return v;
  };
  auto tryAdd = [&](const FieldMatrix& x, std::vector<std::size_t> word) {
    std::vector<mpq_class> v = flatten(x);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const mpq_class& c = v[echelonPivot[k]];
      if (sgn(c) == 0) continue;
      const mpq_class factor = c / echelon[k][echelonPivot[k]];
      for (std::size_t p = 0; p < len; ++p)
        if (sgn(echelon[k][p]) != 0) v[p] -= factor * echelon[k][p];
    }
    std::size_t piv = 0;
    while (piv < len && sgn(v[piv]) == 0) ++piv;
    if (piv == len) return false;
    echelon.push_back(std::move(v));
    echelonPivot.push_back(piv);
    basis_.push_back(x);
    words_.push_back(std::move(word));
    return true;
  };

  auto wordWeight = [&](const std::vector<std::size_t>& word) {
    IntVec w(r, 0);
    for (std::size_t g : word) w[g % r] += g < r ? 1 : -1;
    return w;
  };
  for (std::size_t g = 0; g < gens_.size(); ++g) tryAdd(gens_[g], {g});
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      std::vector<std::size_t> word{g};
      word.insert(word.end(), words_[k].begin(), words_[k].end());
      tryAdd(commutator(gens_[g], basis_[k]), std::move(word));
    }

  for (const auto& w : words_) weights_.push_back(wordWeight(w));
  pivots_ = echelonPivot;
  const std::size_t dim = basis_.size();
  RatMatrix bt(dim, RatVec(dim));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t p = 0; p < dim; ++p) {
      const std::size_t pos = pivots_[p];
      bt[p][k] = basis_[k](pos / m.dim(), pos % m.dim()).coeffs()[0];
    }
  auto inv = rationalInverse(bt);
  if (!inv) throw Error(ErrorCode::ConstructionFailure, "Lie basis pivots are singular");
  solve_ = *inv;
}

std::vector<Cyc> LieModel::coords(const FieldMatrix& x) const {
  const std::size_t dim = basis_.size();
  const std::size_t n = model_->dim();
  const FieldPtr& f = model_->field();
  std::vector<Cyc> c(dim, Cyc(f));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t p = 0; p < dim; ++p) {
      if (sgn(solve_[k][p]) == 0) continue;
      const Cyc& v = x(pivots_[p] / n, pivots_[p] % n);
      if (!v.isZero()) c[k] += v * solve_[k][p];
    }
  if (!(fromCoords(c) == x)) throw Error(ErrorCode::InvalidData, "matrix lies outside the Lie algebra");
  return c;
}

FieldMatrix LieModel::fromCoords(const std::vector<Cyc>& c) const {
  const std::size_t n = model_->dim();
  FieldMatrix x(model_->field(), n, n);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (c[k].isZero()) continue;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Cyc& e = basis_[k](a, b);
        if (!e.isZero()) x(a, b) += c[k] * e.coeffs()[0];
      }
  }
  return x;
}

FieldMatrix LieModel::apply(const LieMap& m, const FieldMatrix& x) const {
  const std::vector<Cyc> c = coords(x);
  std::vector<Cyc> out(dim(), Cyc(model_->field()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t k = 0; k < dim(); ++k)
      if (!m(i, k).isZero() && !c[k].isZero()) out[i] += m(i, k) * c[k];
  return fromCoords(out);
}

LieMap LieModel::identityMap() const { return FieldMatrix::identity(model_->field(), dim()); }

LieMap LieModel::adjoint(const FieldMatrix& g, const FieldMatrix& gInv) const {
  LieMap out(model_->field(), dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const std::vector<Cyc> c = coords(g * basis_[k] * gInv);
    for (std::size_t i = 0; i < dim(); ++i) out(i, k) = c[i];
  }
  return out;
}

FieldMatrix LieModel::evalWord(const std::vector<std::size_t>& word, const std::vector<std::size_t>& genPerm) const {
  FieldMatrix x = gens_[genPerm[word.back()]];
  for (std::size_t k = word.size() - 1; k-- > 0;) x = commutator(gens_[genPerm[word[k]]], x);
  return x;
}

LieMap LieModel::diagram(const std::vector<std::size_t>& perm) const {
  const std::size_t r = perm.size();
  if (2 * r != gens_.size()) throw Error(ErrorCode::InvalidAutomorphism, "permutation size differs from rank");
  std::vector<std::size_t> genPerm(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    genPerm[i] = perm[i];
    genPerm[r + i] = r + perm[i];
  }
  LieMap out(model_->field(), dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    std::vector<Cyc> c;
    try {
      c = coords(evalWord(words_[k], genPerm));
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidAutomorphism, "permuted brackets leave the Lie algebra");
    }
    for (std::size_t i = 0; i < dim(); ++i) out(i, k) = c[i];
  }
  for (std::size_t g = 0; g < gens_.size(); ++g)
    for (std::size_t k = 0; k < dim(); ++k) {
      const FieldMatrix lhs = apply(out, commutator(gens_[g], basis_[k]));
      const FieldMatrix rhs = commutator(gens_[genPerm[g]], apply(out, basis_[k]));
      if (!(lhs == rhs)) throw Error(ErrorCode::InvalidAutomorphism, "node permutation is not a Lie automorphism");
    }
  return out;
}

LieMap LieModel::torusAdjoint(const std::vector<Cyc>& simpleRootValues) const {
  LieMap out(model_->field(), dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    Cyc v(model_->field(), 1);
    for (std::size_t i = 0; i < simpleRootValues.size(); ++i)
      if (weights_[k][i] != 0) v = v * simpleRootValues[i].pow(weights_[k][i]);
    out(k, k) = v;
  }
  return out;
}

AdjointAction::AdjointAction(DatumPtr d, Int n) : datum_(std::move(d)), order_(n) {
  const int r = static_cast<int>(datum_->semisimpleRank());
  if (datum_->family().size() != 1 || !(datum_->cartanMatrix() == cartanMatrixOfType(datum_->family(), r)))
    throw Error(ErrorCode::InvalidType, "datum is not in standard form for its type");
  lie_ = std::make_shared<LieModel>(MatrixModel::realize(buildFromType(datum_->family(), r, Isogeny::SimplyConnected), n));
}

void AdjointAction::assign(const std::string& symbol, const Cyc& value) {
  if (value.isZero()) throw Error(ErrorCode::InvalidData, "symbol value must be nonzero");
  values_[symbol] = value;
}

Cyc AdjointAction::value(const KElem& k) const {
  if (order_ % k.modulus() != 0) throw Error(ErrorCode::InvalidData, "K order does not divide the field order");
  Cyc v = Cyc::zeta(field(), checkedMul(k.zeta(), order_ / k.modulus()));
  for (const auto& [s, e] : k.free()) {
    auto it = values_.find(s);
    if (it == values_.end()) throw Error(ErrorCode::UnassignedSymbol, "symbol '" + s + "' has no value");
    v = v * it->second.pow(e);
  }
  return v;
}

LieMap AdjointAction::torus(const TorusPoint& t) const {
  requireSameDatum(t.datum(), datum_);
  std::vector<Cyc> vals;
  for (std::size_t i = 0; i < datum_->semisimpleRank(); ++i) vals.push_back(value(evalRoot(datum_->root(i), t)));
  return lie_->torusAdjoint(vals);
}

LieMap AdjointAction::weyl(const WeylElem& w) const {
  auto it = weylCache_.find(w.word());
  if (it != weylCache_.end()) return it->second;
  const MatrixModel& m = lie_->model();
  FieldMatrix g = m.wordMatrix(w.word());
  FieldMatrix gInv = FieldMatrix::identity(m.field(), m.dim());
  for (auto k = w.word().rbegin(); k != w.word().rend(); ++k) gInv = gInv * m.nInverse(*k);
  LieMap ad = lie_->adjoint(g, gInv);
  weylCache_.emplace(w.word(), ad);
  return ad;
}

LieMap AdjointAction::diagram(const std::vector<std::size_t>& perm) const {
  auto it = diagramCache_.find(perm);
  if (it != diagramCache_.end()) return it->second;
  LieMap m = lie_->diagram(perm);
  diagramCache_.emplace(perm, m);
  return m;
}

}  // namespace lgk
