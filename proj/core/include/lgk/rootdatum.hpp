#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/intmat.hpp"

namespace lgk {

enum class Isogeny { SimplyConnected, Adjoint, Other };

std::string_view to_string(Isogeny iso);
Isogeny parseIsogeny(std::string_view s);

/// Based root datum in a fixed basis: the character lattice X and the
/// cocharacter lattice X^v are both Z^rank and pair by the dot product.
///
/// Roots are stored positives first, ordered by height and then
/// lexicographically on simple-root coordinates (larger leading coordinate
/// first), followed by the negatives in the same order. Simple root i sits at
/// index i.
class BasedRootDatum {
 public:
  /// Closes the simple system under simple reflections. Throws InvalidType
  /// when the simple data do not form a finite reduced root system.
  static BasedRootDatum fromSimple(std::string family, Isogeny isogeny, std::vector<IntVec> simpleRoots,
                                   std::vector<IntVec> simpleCoroots);

  const std::string& family() const { return family_; }
  std::string label() const;
  Isogeny isogeny() const { return isogeny_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimpleRank() const { return numSimple_; }
  std::size_t numRoots() const { return roots_.size(); }
  std::size_t numPositive() const { return roots_.size() / 2; }

  const std::vector<IntVec>& roots() const { return roots_; }
  const std::vector<IntVec>& coroots() const { return coroots_; }
  const IntVec& root(std::size_t i) const { return roots_[i]; }
  const IntVec& coroot(std::size_t i) const { return coroots_[i]; }
  /// Coordinates of root i in the basis of simple roots.
  const IntVec& simpleCoords(std::size_t i) const { return simpleCoords_[i]; }
  std::vector<std::size_t> simpleIndices() const;

  bool isPositive(std::size_t i) const { return i < numPositive(); }
  std::size_t negative(std::size_t i) const { return i < numPositive() ? i + numPositive() : i - numPositive(); }
  Int height(std::size_t i) const;
  std::optional<std::size_t> rootIndex(const IntVec& v) const;
  std::optional<std::size_t> corootIndex(const IntVec& v) const;

  /// Cartan matrix with entries <alpha_i, alpha_j^v> over simple indices.
  IntMatrix cartanMatrix() const;

  /// Simple reflection s_i on X and on X^v.
  IntVec reflectChar(std::size_t i, const IntVec& x) const;
  IntVec reflectCochar(std::size_t i, const IntVec& y) const;
  IntMatrix simpleReflectionChar(std::size_t i) const;
  IntMatrix simpleReflectionCochar(std::size_t i) const;

  /// Checks every datum invariant; returns a description of the first
  /// violation, or nullopt.
  std::optional<std::string> validate() const;

  friend bool operator==(const BasedRootDatum& a, const BasedRootDatum& b);

 private:
  std::string family_;
  Isogeny isogeny_ = Isogeny::Other;
  std::size_t rank_ = 0;
  std::size_t numSimple_ = 0;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::vector<IntVec> simpleCoords_;
  std::map<IntVec, std::size_t> rootLookup_;
  std::map<IntVec, std::size_t> corootLookup_;
};

using DatumPtr = std::shared_ptr<const BasedRootDatum>;

/// Cartan matrix of an irreducible type; throws InvalidType.
IntMatrix cartanMatrixOfType(std::string_view family, int rank);

/// Builds a datum from a Cartan letter and rank (A_n n>=1, B_n/C_n n>=2,
/// D_n n>=3, G2) for the simply-connected or adjoint isogeny.
DatumPtr buildFromType(std::string_view family, int rank, Isogeny isogeny);
/// Accepts labels such as "A2" or "B2".
DatumPtr buildFromLabel(std::string_view label, Isogeny isogeny);

/// Swaps lattices and roots with coroots; B <-> C, sc <-> adjoint.
DatumPtr dual(const BasedRootDatum& d);

/// Sum of the positive coroots, i.e. 2 rho^v.
IntVec rhoCheckDouble(const BasedRootDatum& d);

/// Identifies the Cartan type (e.g. "C2", "A1+A1") of a Cartan matrix, up to
/// relabelling of nodes. Exact matches without relabelling win.
std::string identifyCartanType(const IntMatrix& cartan);

/// Automorphism of the based datum that permutes the simple roots.
class PinnedAutomorphism {
 public:
  /// Throws InvalidAutomorphism when `perm` is not a diagram automorphism or
  /// does not lift to the lattice.
  static PinnedAutomorphism fromPermutation(DatumPtr datum, std::vector<std::size_t> perm);
  static PinnedAutomorphism identity(DatumPtr datum);

  const DatumPtr& datum() const { return datum_; }
  const std::vector<std::size_t>& simplePermutation() const { return perm_; }
  const IntMatrix& charMap() const { return charMap_; }
  const IntMatrix& cocharMap() const { return cocharMap_; }
  std::size_t applyRoot(std::size_t rootIdx) const { return rootPerm_[rootIdx]; }
  const std::vector<std::size_t>& rootPermutation() const { return rootPerm_; }
  IntVec applyChar(const IntVec& x) const { return charMap_.apply(x); }
  IntVec applyCochar(const IntVec& y) const { return cocharMap_.apply(y); }
  bool isIdentity() const;
  int order() const;

  PinnedAutomorphism compose(const PinnedAutomorphism& other) const;  // this after other
  PinnedAutomorphism inverse() const;

  friend bool operator==(const PinnedAutomorphism& a, const PinnedAutomorphism& b) {
    return a.perm_ == b.perm_ && a.charMap_ == b.charMap_;
  }

 private:
  DatumPtr datum_;
  std::vector<std::size_t> perm_;
  IntMatrix charMap_;
  IntMatrix cocharMap_;
  std::vector<std::size_t> rootPerm_;
};

/// Every permutation of simple nodes that is a diagram automorphism.
std::vector<std::vector<std::size_t>> diagramAutomorphisms(const BasedRootDatum& d);

nlohmann::json toJson(const BasedRootDatum& d);
/// Rebuilds from the serialized simple system and checks the stored roots.
DatumPtr datumFromJson(const nlohmann::json& j);

}  // namespace lgk
