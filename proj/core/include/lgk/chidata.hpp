#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/tits.hpp"

namespace lgk {

/// theta w theta^{-1}.
WeylElem conjugateByDiagram(const PinnedAutomorphism& theta, const WeylElem& w);

/// Torus over a based datum whose Galois action is twisted through the Weyl
/// group: sigma acts on X as w_S(sigma) o theta_sigma and on K through the
/// coefficient action.
class TwistedTorusDatum {
 public:
  TwistedTorusDatum() = default;
  /// Throws InvalidData unless theta is a homomorphism and
  /// w_S(st) = w_S(s) theta_s(w_S(t)).
  TwistedTorusDatum(DatumPtr d, CoeffAction coeff, std::vector<WeylElem> weylImages,
                    std::vector<PinnedAutomorphism> diagramImages);

  /// Trivial group, trivial action.
  static TwistedTorusDatum split(DatumPtr d, Int n = 24);
  /// Z/order generated by theta_g * w_g; the coefficient action must be an
  /// action of Z/order.
  static TwistedTorusDatum cyclic(DatumPtr d, CoeffAction coeff, const WeylElem& w, const PinnedAutomorphism& theta);

  const DatumPtr& datum() const { return datum_; }
  const FiniteGroup& group() const { return coeff_.group(); }
  const CoeffAction& coeff() const { return coeff_; }
  Int modulus() const { return coeff_.modulus(); }
  const WeylElem& weylImage(std::size_t g) const { return weyl_[g]; }
  const PinnedAutomorphism& diagramImage(std::size_t g) const { return theta_[g]; }

  /// Lattice part w_S(g) theta_g on characters.
  IntMatrix charMatrix(std::size_t g) const;
  std::size_t actRoot(std::size_t g, std::size_t rootIdx) const { return rootAction_[g][rootIdx]; }
  KElem actCoeff(std::size_t g, const KElem& k) const { return coeff_.apply(g, k); }
  TorusPoint act(std::size_t g, const TorusPoint& t) const;

  nlohmann::json toJson() const;

 private:
  DatumPtr datum_;
  CoeffAction coeff_;
  std::vector<WeylElem> weyl_;
  std::vector<PinnedAutomorphism> theta_;
  std::vector<std::vector<std::size_t>> rootAction_;
};

/// Root-indexed values a_alpha in K (all roots, datum order).
struct AData {
  std::vector<KElem> values;
  friend bool operator==(const AData& a, const AData& b) = default;
};

/// a_{sigma alpha} = sigma(a_alpha), a_{-alpha} = -a_alpha and, when theta is
/// given, a_{theta alpha} = a_alpha.
std::optional<std::string> validateAData(const TwistedTorusDatum& s, const AData& a,
                                         const PinnedAutomorphism* theta = nullptr);
AData negateA(const AData& a);

/// Characters chi_alpha of cyclic groups D_alpha of order `orders[alpha]`,
/// stored as the exponent k with chi_alpha(generator) = zeta^k. Transport
/// along sigma is the coefficient action: chi_{sigma alpha} = sigma o chi_alpha.
struct ChiData {
  Int modulus = 24;
  std::vector<Int> exponents;
  std::vector<Int> orders;
  friend bool operator==(const ChiData& a, const ChiData& b) = default;
};

std::optional<std::string> validateChiData(const TwistedTorusDatum& s, const ChiData& x);
ChiData negateX(const ChiData& x);
/// Order of chi_alpha as a character.
Int characterOrder(const ChiData& x, std::size_t rootIdx);

using ScalingVector = RootScalars;

/// Throws InvalidScaling unless c is invariant under W and Gamma_f.
void requireInvariantScaling(const TwistedTorusDatum& s, const ScalingVector& c);
ScalingVector constantScaling(const BasedRootDatum& d, const KElem& value);
/// (c.A)_alpha = c_alpha a_alpha.
AData scaleA(const TwistedTorusDatum& s, const ScalingVector& c, const AData& a);
ScalingVector multiplyScaling(const ScalingVector& a, const ScalingVector& b);

/// Random valid data; symbols are drawn from `symbols`. Throws InvalidData
/// when no valid a-data exist over the available coefficients.
AData randomAData(const TwistedTorusDatum& s, std::mt19937_64& rng, const std::vector<std::string>& symbols);
ChiData randomChiData(const TwistedTorusDatum& s, std::mt19937_64& rng, Int maxOrder = 4);
ScalingVector randomScaling(const TwistedTorusDatum& s, std::mt19937_64& rng, const std::vector<std::string>& symbols);

nlohmann::json toJson(const AData& a);
nlohmann::json toJson(const ChiData& x);

enum class OrbitType { R1, R2, R3 };
std::string to_string(OrbitType t);

struct RootOrbit {
  std::vector<std::size_t> roots;  // sorted
  OrbitType type = OrbitType::R1;
  friend bool operator==(const RootOrbit& a, const RootOrbit& b) = default;
};

/// Optional predicate marking an orbit as R3; checked before the R1/R2 test.
using OrbitClassifier = std::function<bool(const BasedRootDatum&, const std::vector<std::size_t>&)>;

OrbitType classifyOrbit(const BasedRootDatum& d, const std::vector<std::size_t>& roots,
                        const OrbitClassifier& r3 = {});

/// <theta>-orbits on all roots, sorted by smallest member. R1: no two members
/// sum to a root; R2: some two members do.
std::vector<RootOrbit> thetaOrbits(const BasedRootDatum& d, const PinnedAutomorphism& theta,
                                   const OrbitClassifier& r3 = {});

struct OrbitNegationResult {
  bool holds = true;
  std::optional<RootOrbit> witness;
};

OrbitNegationResult minusOnePreservesOrbits(const BasedRootDatum& d, const PinnedAutomorphism& theta,
                                            const OrbitClassifier& r3 = {});

nlohmann::json toJson(const RootOrbit& o);

}  // namespace lgk
