#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/torus.hpp"

namespace lgk {

/// Element t * n(w) of the torus normalizer, n the Tits section of the
/// standard pinning.
class ExtWeylElem {
 public:
  ExtWeylElem() = default;
  ExtWeylElem(TorusPoint t, WeylElem w);

  static ExtWeylElem identity(const DatumPtr& d, Int n);
  static ExtWeylElem torus(TorusPoint t);
  /// n(s_i).
  static ExtWeylElem generator(const DatumPtr& d, std::size_t i, Int n);

  const TorusPoint& torusPart() const { return t_; }
  const WeylElem& weylPart() const { return w_; }
  const DatumPtr& datum() const { return w_.datum(); }
  Int modulus() const { return t_.modulus(); }

  /// Right-multiplies by n(w2) one simple generator at a time; a descent
  /// step uses n(w' s_i) n_i = w'(alpha_i^v(-1)) n(w').
  ExtWeylElem operator*(const ExtWeylElem& o) const;
  ExtWeylElem inverse() const;
  /// Conjugation of a torus point: x t x^{-1}.
  TorusPoint conjugate(const TorusPoint& t) const { return t.weylAct(w_); }

  friend bool operator==(const ExtWeylElem& a, const ExtWeylElem& b) {
    return a.w_ == b.w_ && a.t_ == b.t_;
  }

 private:
  TorusPoint t_;
  WeylElem w_;
};

/// n(w) = (1, w).
ExtWeylElem titsSection(const WeylElem& w, Int n);
/// Product of the generators n(s_i) along an arbitrary word.
ExtWeylElem wordProduct(const DatumPtr& d, const Word& word, Int n);

/// Root-indexed scalars c_alpha (all roots, in datum order).
using RootScalars = std::vector<KElem>;

/// Which positive roots carry the scalars in the closed-form rescaled
/// section: the inversion set of w^{-1} (what the stepwise rescaled pinning
/// produces) or that of w.
enum class InversionConvention { InverseInversionSet, Literal };

std::vector<std::size_t> convolutionIndexSet(const WeylElem& w, InversionConvention conv);

/// Throws InvalidScaling unless c_{s_i alpha} = c_alpha for all simple i.
void requireWeylInvariant(const BasedRootDatum& d, const RootScalars& c);

/// prod_{beta in I} beta^v(c_beta) * n(w).
ExtWeylElem rescaledSection(const RootScalars& c, const WeylElem& w, Int n,
                            InversionConvention conv = InversionConvention::InverseInversionSet);
/// Tits section of the rescaled pinning: product of alpha_i^v(c_i) n(s_i)
/// along the canonical word.
ExtWeylElem rescaledSectionStepwise(const RootScalars& c, const WeylElem& w, Int n);

/// prod_{alpha>0} alpha^v(x) = (2 rho^v)(x).
TorusPoint tPoint(const DatumPtr& d, const KElem& x);

struct InverseSectionResult {
  bool holds = false;
  ExtWeylElem lhs;
  ExtWeylElem rhs;
};

/// n(w^{-1})^{-1} against t * w(t)^{-1} * n(w), t = prod_{alpha>0} alpha^v(root).
InverseSectionResult inverseSectionIdentityCheck(const WeylElem& w, const KElem& root);

nlohmann::json toJson(const ExtWeylElem& e);

}  // namespace lgk
