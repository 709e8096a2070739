#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/chidata.hpp"

namespace lgk {

/// sigma -> prod_{beta in I(w)} beta^v(a_beta) * n_{c.spl}(w), w = w_S(sigma),
/// indexed by group element. n_{c.spl} is the Tits section of the rescaled
/// pinning, computed generator by generator. I(w) follows `conv`.
/// Throws InvalidData / InvalidScaling for invalid a-data or scaling.
std::vector<ExtWeylElem> splittingInvariantCore(const TwistedTorusDatum& s, const AData& a, const ScalingVector& c,
                                                InversionConvention conv = InversionConvention::InverseInversionSet);

struct SplcngResult {
  bool holds = true;
  std::optional<std::size_t> failing;
  std::optional<ExtWeylElem> lhs;
  std::optional<ExtWeylElem> rhs;
  nlohmann::json toJson() const;
};

/// Compares core(A, c.spl) with core(c.A, spl) at every group element.
SplcngResult verifySplcng(const TwistedTorusDatum& s, const AData& a, const ScalingVector& c,
                          InversionConvention conv = InversionConvention::InverseInversionSet);

struct SplcngInstance {
  TwistedTorusDatum torus;
  AData a;
  ScalingVector c;
  std::uint64_t seed = 0;
  nlohmann::json describe() const;
};

/// Random cyclic Gamma_f = Z/order acting through a diagram automorphism, a
/// Weyl element and a compatible coefficient action, together with random
/// valid a-data and scaling. Deterministic in `seed`.
SplcngInstance randomSplcngInstance(const DatumPtr& d, std::size_t order, std::uint64_t seed, Int n = 24);

}  // namespace lgk
