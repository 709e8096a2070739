#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/cyclotomic.hpp"

namespace lgk {

/// Z/d_1 x ... x Z/d_k with d_1 | d_2 | ...; elements are exponent vectors,
/// enumerated in mixed radix with the last factor fastest.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Throws InvalidData unless every factor is >= 1 and the divisibility
  /// chain holds (factors equal to 1 are dropped).
  explicit FinAbGroup(std::vector<Int> factors);

  const std::vector<Int>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }
  /// Least common multiple of the factors.
  Int exponent() const { return exponent_; }

  IntVec element(std::size_t index) const;
  std::size_t index(const IntVec& e) const;
  IntVec add(const IntVec& a, const IntVec& b) const;
  IntVec negate(const IntVec& a) const;
  IntVec normalize(const IntVec& a) const;

  /// Field holding all character values.
  const FieldPtr& field() const { return field_; }

 private:
  std::vector<Int> factors_;
  std::size_t order_ = 1;
  Int exponent_ = 1;
  FieldPtr field_;
};

/// Every invariant-factor chain with group order at most maxOrder.
std::vector<FinAbGroup> abelianGroupsUpTo(std::size_t maxOrder);

/// chi_e(x) = prod_i zeta_{d_i}^{e_i x_i}; stored by the exponent vector e.
struct Character {
  IntVec exponents;
  friend bool operator==(const Character& a, const Character& b) = default;
};

/// Index of the character with the given exponents (same enumeration as
/// elements).
std::size_t characterIndex(const FinAbGroup& g, const Character& chi);
Character characterAt(const FinAbGroup& g, std::size_t index);
/// Exponent of the root of unity chi(x) in mu_{exponent}.
Int characterValueExponent(const FinAbGroup& g, const Character& chi, const IntVec& x);
Cyc characterValue(const FinAbGroup& g, const Character& chi, const IntVec& x);
Character multiply(const FinAbGroup& g, const Character& a, const Character& b);
Character conjugate(const FinAbGroup& g, const Character& a);

/// Packet table: labels in bijection with the characters and the pairing
/// <s, rho> with rows s (elements) and columns labels.
class PacketTable {
 public:
  /// `labelOfCharacter[k]` is the label index of character k. Throws
  /// InvalidData unless it is a bijection.
  PacketTable(FinAbGroup g, std::vector<std::string> labels, std::vector<std::size_t> labelOfCharacter);

  /// Random labelling.
  static PacketTable random(FinAbGroup g, std::mt19937_64& rng);

  const FinAbGroup& group() const { return group_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t labelOf(std::size_t characterIdx) const { return labelOf_[characterIdx]; }
  std::size_t characterOf(std::size_t label) const { return charOf_[label]; }
  const Cyc& pairing(std::size_t s, std::size_t label) const { return pairing_[s][label]; }
  /// <s, label> = zeta^k in the group's field.
  Int pairingExponent(std::size_t s, std::size_t label) const { return exps_[s][label]; }

  /// Sum_s <s, rho> conj(<s, rho'>) = |A| delta for all columns; returns a
  /// description of the first failure.
  std::optional<std::string> checkOrthogonality() const;

  nlohmann::json toJson() const;

 private:
  FinAbGroup group_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> labelOf_;
  std::vector<std::size_t> charOf_;
  std::vector<std::vector<Cyc>> pairing_;
  std::vector<std::vector<Int>> exps_;
};

/// Theta_rho = |A|^{-1} sum_s conj(<s, rho>) S_s, indexed by label. Throws
/// DimensionMismatch when `stable` has the wrong length.
std::vector<Cyc> fourierInvert(const PacketTable& t, const std::vector<Cyc>& stable);
/// S_s = sum_rho <s, rho> Theta_rho.
std::vector<Cyc> fourierForward(const PacketTable& t, const std::vector<Cyc>& theta);

struct LabelShift {
  /// perm[iota(rho)] = iota(rho'), the label now attached to rho.
  std::vector<std::size_t> perm;
  bool verified = false;
};

/// Relabelling iota'(rho) = iota(rho eta^{-1}). Verified by twisting a test
/// stable vector by eta(s) and inverting again. Throws InvalidCharacter.
LabelShift whittakerShift(const PacketTable& t, const Character& eta);

/// Automorphism of the group given by the images of the standard generators
/// (columns of `images`).
struct GroupAutomorphism {
  std::vector<IntVec> images;
};

GroupAutomorphism inversionAutomorphism(const FinAbGroup& g);
GroupAutomorphism identityAutomorphism(const FinAbGroup& g);
IntVec applyAutomorphism(const FinAbGroup& g, const GroupAutomorphism& a, const IntVec& x);
/// Throws NotAutomorphism unless the map is well defined and bijective.
void requireAutomorphism(const FinAbGroup& g, const GroupAutomorphism& a);
GroupAutomorphism randomAutomorphism(const FinAbGroup& g, std::mt19937_64& rng);
GroupAutomorphism composeAutomorphisms(const FinAbGroup& g, const GroupAutomorphism& a, const GroupAutomorphism& b);

/// rho -> rho^v o a^{-1}, verified through the reindexing identity
/// sum_s rho(s) V(a(s^{-1})) = sum_s (rho^v o a^{-1})(s) V(s).
LabelShift contragredientShift(const PacketTable& t, const GroupAutomorphism& a);
/// rho -> rho o b^{-1}.
std::vector<std::size_t> precomposeShift(const PacketTable& t, const GroupAutomorphism& b);

/// Integer matrices for the generators of a finite group acting on Z^rank,
/// with the order of each generator.
struct LatticeAction {
  std::size_t rank = 0;
  std::vector<IntMatrix> generators;
  std::vector<Int> orders;
};

/// Throws InvalidData unless each generator is invertible over Z with
/// g^order = 1.
void validateLatticeAction(const LatticeAction& l);

struct CoinvariantsResult {
  std::vector<Int> torsion;  // invariant factors > 1
  std::size_t freeRank = 0;
  Int torsionOrder() const;
  nlohmann::json toJson() const;
};

/// X / <g x - x>, from the Smith form of the stacked (g - 1).
CoinvariantsResult coinvariants(const LatticeAction& l);

struct FixedTorusCount {
  Int level = 0;
  std::size_t pointsAtLevel = 0;
  std::size_t pointsAtDoubleLevel = 0;
  std::size_t freeRank = 0;
  Int componentCount = 0;
  bool matches = false;
};

/// Counts t in (Z/m)^rank with (g^T - 1) t = 0 mod m at m and 2m, infers the
/// free rank and component count of the fixed subgroup of the dual torus,
/// and compares with the coinvariants. Throws InconclusiveBound when some
/// torsion factor does not divide m.
FixedTorusCount fixedTorusCharacters(const LatticeAction& l, Int m);

/// Random action of Z/order on Z^rank: a conjugate of a block matrix by a
/// random unimodular matrix.
LatticeAction randomLatticeAction(std::size_t rank, Int order, std::mt19937_64& rng);

}  // namespace lgk
