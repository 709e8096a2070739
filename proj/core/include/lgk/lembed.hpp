#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/chevalley.hpp"
#include "lgk/chidata.hpp"

namespace lgk {

/// Pinned automorphism applied to t n(w): theta(t) n(theta w theta^{-1}).
ExtWeylElem pinnedAct(const PinnedAutomorphism& theta, const ExtWeylElem& x);

/// Product in G x| Gamma_f, the group acting through the diagram images of
/// the twisted torus: (g1, w1)(g2, w2) = (g1 gamma_{w1}(g2), w1 w2).
LElement lgroupMul(const TwistedTorusDatum& s, const LElement& a, const LElement& b);

/// w -> r(w) in the torus of the dual group.
struct RCochain {
  std::vector<TorusPoint> values;
  std::string label;
  friend bool operator==(const RCochain& a, const RCochain& b) { return a.values == b.values; }
};

RCochain trivialRCochain(const TwistedTorusDatum& s);
/// Pointwise inverse: the cochain attached to -X.
RCochain negateRCochain(const RCochain& r);

/// First pair (w1, w2) where r(w1) w1(r(w2)) n(v1) gamma_{w1}(n(v2)) differs
/// from r(w1 w2) n(v_{12}), v = sigma_S.
std::optional<std::pair<std::size_t, std::size_t>> rcochainDefect(const TwistedTorusDatum& s, const RCochain& r);

/// Every cochain with r(1) = 1 and values of order at most `orderBound`
/// (coordinates in mu_{lcm(1..orderBound)}) that satisfies the homomorphism
/// property.
std::vector<RCochain> searchRCochains(const TwistedTorusDatum& s, Int orderBound = 4);

/// (s, w) -> (s r(w) n(sigma_S(w)), w).
class LEmbedding {
 public:
  const TwistedTorusDatum& torus() const { return s_; }
  const RCochain& cochain() const { return r_; }
  LElement operator()(const TorusPoint& t, std::size_t w) const;

 private:
  friend LEmbedding buildLEmbedding(const TwistedTorusDatum& s, const RCochain& r);
  TwistedTorusDatum s_;
  RCochain r_;
};

/// Throws InvalidRCochain, naming the failing pair, unless the map is a
/// homomorphism on S x| Gamma_f (checked with symbolic torus points).
LEmbedding buildLEmbedding(const TwistedTorusDatum& s, const RCochain& r);

/// (s, w) -> (s^{-1}, w).
std::pair<TorusPoint, std::size_t> minusOneOnLS(const TorusPoint& s, std::size_t w);

struct ChiInvResult {
  bool holds = true;
  bool matrixChecked = false;
  std::size_t inputs = 0;
  std::string witness;
  nlohmann::json toJson() const;
};

/// ^LC o xi_X = Ad(t) o xi_{-X} o (-1) on torus generators x Gamma_f, with
/// t = prod_{alpha>0} alpha^v(i). Compared symbolically in the normalizer
/// and, when the type has a model, as maps on the Lie algebra.
ChiInvResult verifyChiInv(const ChevalleyInvolution& c, const LEmbedding& embX, const LEmbedding& embNegX);

/// Every Z/order twist (theta, w) with (w theta)^order = 1 and trivial
/// coefficient action.
std::vector<TwistedTorusDatum> cyclicTwists(const DatumPtr& d, std::size_t order, Int n = 24);

nlohmann::json toJson(const RCochain& r);

}  // namespace lgk
