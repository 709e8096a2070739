#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/rootdatum.hpp"

namespace lgk {

using Word = std::vector<std::size_t>;

/// Element of the Weyl group of a based root datum, stored by its action on
/// the character lattice together with the lexicographically least reduced
/// word (0-based simple indices).
class WeylElem {
 public:
  WeylElem() = default;

  static WeylElem identity(DatumPtr d);
  static WeylElem reflection(DatumPtr d, std::size_t i);
  /// Any word, reduced or not.
  static WeylElem fromWord(DatumPtr d, const Word& word);
  /// Throws InvalidData when `m` does not come from the Weyl group.
  static WeylElem fromMatrix(DatumPtr d, const IntMatrix& m);

  const DatumPtr& datum() const { return datum_; }
  const IntMatrix& charMatrix() const { return mat_; }
  /// Action on cocharacters, (W^{-1})^T.
  IntMatrix cocharMatrix() const { return inv_.transpose(); }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool isIdentity() const { return word_.empty(); }

  IntVec actChar(const IntVec& x) const { return mat_.apply(x); }
  IntVec actCochar(const IntVec& y) const;
  std::size_t actRoot(std::size_t rootIdx) const;

  /// w alpha_i < 0.
  bool hasRightDescent(std::size_t i) const;
  /// w^{-1} alpha_i < 0.
  bool hasLeftDescent(std::size_t i) const;

  /// Positive roots sent to negative roots.
  std::vector<std::size_t> inversionSet() const;

  WeylElem compose(const WeylElem& other) const;
  WeylElem inverse() const;
  WeylElem operator*(const WeylElem& other) const { return compose(other); }

  friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.mat_ == b.mat_; }
  friend bool operator<(const WeylElem& a, const WeylElem& b) { return a.mat_ < b.mat_; }

 private:
  WeylElem(DatumPtr d, IntMatrix m, IntMatrix inv);
  void computeWord();

  DatumPtr datum_;
  IntMatrix mat_;
  IntMatrix inv_;
  Word word_;
};

void requireSameDatum(const DatumPtr& a, const DatumPtr& b);

WeylElem longestElement(const DatumPtr& d);

/// Breadth-first closure; throws EnumerationCap past `cap` elements.
std::vector<WeylElem> enumerateWeylGroup(const DatumPtr& d, std::size_t cap = 10000);

/// Every reduced expression of w, sorted.
std::vector<Word> reducedWords(const WeylElem& w);

/// Words serialize with 1-based indices.
nlohmann::json wordToJson(const Word& w);

}  // namespace lgk
