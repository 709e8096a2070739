#include "lgk/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lgk/error.hpp"

namespace lgk {

void requireSameDatum(const DatumPtr& a, const DatumPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorCode::DatumMismatch, "elements live over different root data");
}

WeylElem::WeylElem(DatumPtr d, IntMatrix m, IntMatrix inv) : datum_(std::move(d)), mat_(std::move(m)), inv_(std::move(inv)) {
  computeWord();
}

void WeylElem::computeWord() {
  word_.clear();
  const BasedRootDatum& d = *datum_;
  IntMatrix cur = mat_;
  IntMatrix curInv = inv_;
  for (;;) {
    bool found = false;
    for (std::size_t i = 0; i < d.semisimpleRank(); ++i) {
      auto idx = d.rootIndex(curInv.apply(d.root(i)));
      if (!idx) throw Error(ErrorCode::InvalidData, "lattice map does not permute the roots");
      if (!d.isPositive(*idx)) {
        word_.push_back(i);
        const IntMatrix s = d.simpleReflectionChar(i);
        cur = s * cur;
        curInv = curInv * s;
        found = true;
        break;
      }
    }
    if (!found) break;
    if (word_.size() > d.numPositive()) throw Error(ErrorCode::InvalidData, "not a Weyl group element");
  }
  if (!cur.isIdentity()) throw Error(ErrorCode::InvalidData, "lattice map is not in the Weyl group");
}

WeylElem WeylElem::identity(DatumPtr d) {
  const std::size_t r = d->rank();
  return WeylElem(std::move(d), IntMatrix::identity(r), IntMatrix::identity(r));
}

WeylElem WeylElem::reflection(DatumPtr d, std::size_t i) {
  if (i >= d->semisimpleRank()) throw Error(ErrorCode::InvalidData, "simple index out of range");
  IntMatrix s = d->simpleReflectionChar(i);
  return WeylElem(std::move(d), s, s);
}

WeylElem WeylElem::fromWord(DatumPtr d, const Word& word) {
  IntMatrix m = IntMatrix::identity(d->rank());
  for (std::size_t i : word) {
    if (i >= d->semisimpleRank()) throw Error(ErrorCode::InvalidData, "simple index out of range");
    m = m * d->simpleReflectionChar(i);
  }
  IntMatrix inv = IntMatrix::identity(d->rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it) inv = inv * d->simpleReflectionChar(*it);
  return WeylElem(std::move(d), m, inv);
}

WeylElem WeylElem::fromMatrix(DatumPtr d, const IntMatrix& m) {
  auto inv = integerInverse(m);
  if (!inv) throw Error(ErrorCode::InvalidData, "matrix is not invertible over Z");
  return WeylElem(std::move(d), m, *inv);
}

IntVec WeylElem::actCochar(const IntVec& y) const { return inv_.transpose().apply(y); }

std::size_t WeylElem::actRoot(std::size_t rootIdx) const {
  auto idx = datum_->rootIndex(mat_.apply(datum_->root(rootIdx)));
  if (!idx) throw Error(ErrorCode::InvalidData, "Weyl element does not permute the roots");
  return *idx;
}

bool WeylElem::hasRightDescent(std::size_t i) const { return !datum_->isPositive(actRoot(i)); }

bool WeylElem::hasLeftDescent(std::size_t i) const {
  auto idx = datum_->rootIndex(inv_.apply(datum_->root(i)));
  return !datum_->isPositive(*idx);
}

std::vector<std::size_t> WeylElem::inversionSet() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < datum_->numPositive(); ++a)
    if (!datum_->isPositive(actRoot(a))) out.push_back(a);
  return out;
}

WeylElem WeylElem::compose(const WeylElem& other) const {
  requireSameDatum(datum_, other.datum_);
  return WeylElem(datum_, mat_ * other.mat_, other.inv_ * inv_);
}

WeylElem WeylElem::inverse() const { return WeylElem(datum_, inv_, mat_); }

WeylElem longestElement(const DatumPtr& d) {
  WeylElem w = WeylElem::identity(d);
  for (;;) {
    bool extended = false;
    for (std::size_t i = 0; i < d->semisimpleRank(); ++i)
      if (!w.hasRightDescent(i)) {
        w = w * WeylElem::reflection(d, i);
        extended = true;
        break;
      }
    if (!extended) return w;
  }
}

std::vector<WeylElem> enumerateWeylGroup(const DatumPtr& d, std::size_t cap) {
  std::set<WeylElem> seen;
  std::vector<WeylElem> out;
  std::deque<WeylElem> queue;
  const WeylElem e = WeylElem::identity(d);
  seen.insert(e);
  out.push_back(e);
  queue.push_back(e);
  std::vector<WeylElem> gens;
  for (std::size_t i = 0; i < d->semisimpleRank(); ++i) gens.push_back(WeylElem::reflection(d, i));
  while (!queue.empty()) {
    const WeylElem w = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      WeylElem next = w * s;
      if (seen.insert(next).second) {
        if (out.size() >= cap) throw Error(ErrorCode::EnumerationCap, "Weyl group exceeds " + std::to_string(cap));
        out.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

namespace {

void collectReducedWords(const WeylElem& w, Word& suffix, std::vector<Word>& out) {
  if (w.isIdentity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  const DatumPtr& d = w.datum();
  for (std::size_t i = 0; i < d->semisimpleRank(); ++i)
    if (w.hasRightDescent(i)) {
      suffix.push_back(i);
      collectReducedWords(w * WeylElem::reflection(d, i), suffix, out);
      suffix.pop_back();
    }
}

}  // namespace

std::vector<Word> reducedWords(const WeylElem& w) {
  std::vector<Word> out;
  Word suffix;
  collectReducedWords(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json wordToJson(const Word& w) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i : w) j.push_back(i + 1);
  return j;
}

}  // namespace lgk
