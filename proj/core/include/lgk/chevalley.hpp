#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/models.hpp"

namespace lgk {

/// C = Ad(n(w0)) o Ad(t0) o theta_{-w0}: inverts the torus and sends the
/// standard pinning to the opposite one.
class ChevalleyInvolution {
 public:
  const DatumPtr& datum() const { return datum_; }
  /// Diagram automorphism realizing -w0.
  const PinnedAutomorphism& diagramPart() const { return diagram_; }
  const WeylElem& longest() const { return w0_; }
  ExtWeylElem weylConjugator() const { return titsSection(w0_, order_); }
  const TorusPoint& torusCorrection() const { return t0_; }
  /// Ad(n(w0)) X_{pi(i)} = zeta^{k_i} X_{-alpha_i}.
  const std::vector<Int>& epsilonExponents() const { return eps_; }
  /// Number of t0 in (mu_N)^rank meeting the alignment conditions.
  std::size_t t0SolutionCount() const { return t0Count_; }
  Int modulus() const { return order_; }

  /// Symbolic action on the torus normalizer: (t, v) -> (t^{-1}, e) n(v^{-1})^{-1}.
  ExtWeylElem apply(const ExtWeylElem& x) const;
  TorusPoint applyTorus(const TorusPoint& t) const { return t.inverse(); }
  /// Lattice map of the whole involution on characters (always -1).
  IntMatrix latticeMap() const;

  /// The involution on the Lie algebra.
  const AdjointAction& action() const { return *action_; }
  const LieMap& lieMap() const { return lie_; }

 private:
  friend ChevalleyInvolution buildChevalley(const DatumPtr& d, Int n);

  DatumPtr datum_;
  PinnedAutomorphism diagram_;
  WeylElem w0_;
  TorusPoint t0_;
  std::vector<Int> eps_;
  std::size_t t0Count_ = 0;
  Int order_ = 24;
  std::shared_ptr<AdjointAction> action_;
  LieMap lie_;
};

/// Throws InvalidType when the type has no matrix model and
/// ConstructionFailure when no t0 exists in (mu_N)^rank.
ChevalleyInvolution buildChevalley(const DatumPtr& d, Int n = 24);

/// Element (g, sigma) of G x| Gamma_f, acting on G through pinned
/// automorphisms.
struct LElement {
  ExtWeylElem g;
  std::size_t sigma = 0;
  friend bool operator==(const LElement& a, const LElement& b) = default;
};

/// (g, sigma) -> (C(g), sigma).
LElement applyLC(const ChevalleyInvolution& c, const LElement& x);

/// prod_{alpha>0} alpha^v(i) as an element of the normalizer.
ExtWeylElem tElement(const DatumPtr& d, Int n = 24, bool negativeRoot = false);

struct ChevalleyCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ChevalleyReport {
  std::vector<ChevalleyCheck> checks;
  /// Torus point x with C^2 = Ad(x), when found.
  std::optional<TorusPoint> squareWitness;
  bool allOk() const;
  nlohmann::json toJson() const;
};

/// Matrix-level verification: opposite pinning, commuting with every
/// diagram automorphism, lattice part (-1) o w0, torus inversion, agreement
/// of the symbolic action with the Lie-level map, and C^2 inner by a torus
/// element.
ChevalleyReport verifyChevalley(const ChevalleyInvolution& c);

}  // namespace lgk
