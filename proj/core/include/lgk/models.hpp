#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgk/cyclotomic.hpp"
#include "lgk/tits.hpp"

namespace lgk {

/// Classical matrix group over Q(zeta_N) with its standard pinning:
/// SL_{n+1} (PGL_{n+1} for adjoint A_n), SO_{2n+1}, Sp_{2n}, SO_{2n}.
/// Orthogonal and symplectic groups use the antidiagonal form.
class MatrixModel {
 public:
  /// Throws InvalidType for G2 and for data whose cocharacter lattice does
  /// not map into the model torus (adjoint C_n, adjoint D_n).
  static MatrixModel realize(DatumPtr d, Int n = 24);

  const DatumPtr& datum() const { return datum_; }
  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  bool projective() const { return projective_; }
  /// Defining form, when there is one.
  const std::optional<FieldMatrix>& form() const { return form_; }
  /// Images of the datum cocharacter basis in the diagonal cocharacters.
  const IntMatrix& cocharEmbedding() const { return embed_; }

  const FieldMatrix& X(std::size_t i) const { return x_[i]; }
  const FieldMatrix& Y(std::size_t i) const { return y_[i]; }
  const FieldMatrix& H(std::size_t i) const { return h_[i]; }
  const FieldMatrix& n(std::size_t i) const { return n_[i]; }
  const FieldMatrix& nInverse(std::size_t i) const { return nInv_[i]; }

  void assign(const std::string& symbol, const Cyc& value);
  Cyc value(const KElem& k) const;

  FieldMatrix torusMatrix(const TorusPoint& t) const;
  FieldMatrix wordMatrix(const Word& w) const;
  FieldMatrix weylMatrix(const WeylElem& w) const { return wordMatrix(w.word()); }
  FieldMatrix embedExt(const ExtWeylElem& e) const;
  FieldMatrix inverse(const FieldMatrix& g) const { return g.inverse(); }

  /// Equality in the group (up to scalars for projective models).
  bool sameElement(const FieldMatrix& a, const FieldMatrix& b) const;
  bool preservesForm(const FieldMatrix& g) const;
  /// True when X^T J + J X = 0 (always true without a form).
  bool inLieAlgebra(const FieldMatrix& x) const;
  /// Simple root character evaluated on a diagonal matrix.
  Cyc simpleRootValue(std::size_t i, const FieldMatrix& diag) const;

 private:
  DatumPtr datum_;
  FieldPtr field_;
  Int order_ = 24;
  std::size_t dim_ = 0;
  bool projective_ = false;
  std::optional<FieldMatrix> form_;
  std::vector<IntVec> weights_;
  std::vector<IntVec> modelRoots_;
  IntMatrix embed_;
  std::vector<FieldMatrix> x_, y_, h_, n_, nInv_;
  std::map<std::string, Cyc> values_;
};

using LieMap = FieldMatrix;

/// Lie algebra of a matrix model spanned by iterated brackets of the
/// pinning vectors X_i, X_{-i}; linear maps act on coordinate columns.
class LieModel {
 public:
  explicit LieModel(const MatrixModel& m);

  const MatrixModel& model() const { return *model_; }
  const std::shared_ptr<const MatrixModel>& modelPtr() const { return model_; }
  std::size_t dim() const { return basis_.size(); }
  const FieldMatrix& basis(std::size_t k) const { return basis_[k]; }
  /// Generator g < r is X_g, otherwise X_{-(g-r)}.
  const std::vector<std::size_t>& bracketWord(std::size_t k) const { return words_[k]; }

  /// Throws InvalidData when x is outside the algebra.
  std::vector<Cyc> coords(const FieldMatrix& x) const;
  FieldMatrix fromCoords(const std::vector<Cyc>& c) const;
  FieldMatrix apply(const LieMap& m, const FieldMatrix& x) const;

  LieMap identityMap() const;
  /// Ad(g); gInv must be the inverse of g.
  LieMap adjoint(const FieldMatrix& g, const FieldMatrix& gInv) const;
  LieMap adjoint(const FieldMatrix& g) const { return adjoint(g, g.inverse()); }
  /// Pinned automorphism X_{+-i} -> X_{+-perm(i)}; throws InvalidAutomorphism
  /// when the assignment is not a Lie algebra automorphism.
  LieMap diagram(const std::vector<std::size_t>& perm) const;
  /// Torus acting with the given values of the simple roots.
  LieMap torusAdjoint(const std::vector<Cyc>& simpleRootValues) const;
  /// Weight of basis vector k in simple-root coordinates.
  const IntVec& weight(std::size_t k) const { return weights_[k]; }

 private:
  FieldMatrix evalWord(const std::vector<std::size_t>& word, const std::vector<std::size_t>& genPerm) const;

  std::shared_ptr<const MatrixModel> model_;
  std::vector<FieldMatrix> gens_;
  std::vector<FieldMatrix> basis_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<IntVec> weights_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<mpq_class>> solve_;
};

/// Adjoint action of the torus normalizer of a datum on its Lie algebra,
/// realized through the simply-connected model of the same type. Torus
/// points act through the datum's own root values, so every isogeny of a
/// supported type is covered.
class AdjointAction {
 public:
  AdjointAction(DatumPtr d, Int n = 24);

  const DatumPtr& datum() const { return datum_; }
  const LieModel& lie() const { return *lie_; }
  const MatrixModel& typeModel() const { return lie_->model(); }
  const FieldPtr& field() const { return lie_->model().field(); }

  void assign(const std::string& symbol, const Cyc& value);
  Cyc value(const KElem& k) const;

  LieMap torus(const TorusPoint& t) const;
  LieMap weyl(const WeylElem& w) const;
  LieMap ext(const ExtWeylElem& e) const { return torus(e.torusPart()) * weyl(e.weylPart()); }
  LieMap diagram(const std::vector<std::size_t>& perm) const;

 private:
  DatumPtr datum_;
  Int order_;
  std::shared_ptr<LieModel> lie_;
  std::map<std::string, Cyc> values_;
  mutable std::map<Word, LieMap> weylCache_;
  mutable std::map<std::vector<std::size_t>, LieMap> diagramCache_;
};

}  // namespace lgk
