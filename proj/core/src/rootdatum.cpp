#include "lgk/rootdatum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

#include "lgk/error.hpp"

namespace lgk {

std::string_view to_string(Isogeny iso) {
  switch (iso) {
    case Isogeny::SimplyConnected: return "simply-connected";
    case Isogeny::Adjoint: return "adjoint";
    case Isogeny::Other: return "other";
  }
  return "other";
}

Isogeny parseIsogeny(std::string_view s) {
  if (s == "simply-connected" || s == "sc") return Isogeny::SimplyConnected;
  if (s == "adjoint" || s == "adj") return Isogeny::Adjoint;
  if (s == "other") return Isogeny::Other;
  throw Error(ErrorCode::InvalidType, "unknown isogeny '" + std::string(s) + "'");
}

namespace {

constexpr std::size_t kMaxRoots = 4096;

struct RootRecord {
  IntVec root;
  IntVec coroot;
  IntVec coords;
};

Int sum(const IntVec& v) { return std::accumulate(v.begin(), v.end(), Int{0}); }

// Height first, then larger leading simple coordinate first.
bool positiveOrder(const RootRecord& a, const RootRecord& b) {
  const Int ha = sum(a.coords), hb = sum(b.coords);
  if (ha != hb) return ha < hb;
  return a.coords > b.coords;
}

}  // namespace

BasedRootDatum BasedRootDatum::fromSimple(std::string family, Isogeny isogeny, std::vector<IntVec> simpleRoots,
                                          std::vector<IntVec> simpleCoroots) {
  if (simpleRoots.size() != simpleCoroots.size())
    throw Error(ErrorCode::InvalidType, "simple roots and coroots differ in number");
  if (simpleRoots.empty()) throw Error(ErrorCode::InvalidType, "empty simple system");
  const std::size_t rank = simpleRoots.front().size();
  const std::size_t n = simpleRoots.size();
  for (std::size_t i = 0; i < n; ++i)
    if (simpleRoots[i].size() != rank || simpleCoroots[i].size() != rank)
      throw Error(ErrorCode::InvalidType, "simple data of inconsistent lattice rank");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int a = dot(simpleRoots[i], simpleCoroots[j]);
      if (i == j && a != 2) throw Error(ErrorCode::InvalidType, "<alpha_i, alpha_i^v> != 2");
      if (i != j && a > 0) throw Error(ErrorCode::InvalidType, "positive off-diagonal Cartan entry");
      if (i != j && (a == 0) != (dot(simpleRoots[j], simpleCoroots[i]) == 0))
        throw Error(ErrorCode::InvalidType, "Cartan matrix is not symmetrizable");
    }

  std::map<IntVec, RootRecord> found;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec coords(n, 0);
    coords[i] = 1;
    found.emplace(simpleRoots[i], RootRecord{simpleRoots[i], simpleCoroots[i], coords});
    queue.push_back(simpleRoots[i]);
  }
  while (!queue.empty()) {
    const RootRecord rec = found.at(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      const Int k = dot(rec.root, simpleCoroots[j]);
      const Int kc = dot(simpleRoots[j], rec.coroot);
      RootRecord next{rec.root - k * simpleRoots[j], rec.coroot - kc * simpleCoroots[j], rec.coords};
      next.coords[j] -= k;
      if (found.count(next.root)) continue;
      if (found.size() >= kMaxRoots) throw Error(ErrorCode::InvalidType, "root system is not finite");
      queue.push_back(next.root);
      found.emplace(next.root, std::move(next));
    }
  }

  std::vector<RootRecord> positive;
  for (auto& [key, rec] : found) {
    const bool pos = std::all_of(rec.coords.begin(), rec.coords.end(), [](Int c) { return c >= 0; });
    const bool neg = std::all_of(rec.coords.begin(), rec.coords.end(), [](Int c) { return c <= 0; });
    if (!pos && !neg) throw Error(ErrorCode::InvalidType, "root neither positive nor negative");
    if (pos) positive.push_back(rec);
  }
  std::sort(positive.begin(), positive.end(), positiveOrder);
  if (positive.size() * 2 != found.size()) throw Error(ErrorCode::InvalidType, "root system is not symmetric");

  BasedRootDatum d;
  d.family_ = std::move(family);
  d.isogeny_ = isogeny;
  d.rank_ = rank;
  d.numSimple_ = n;
  for (const auto& rec : positive) {
    d.roots_.push_back(rec.root);
    d.coroots_.push_back(rec.coroot);
    d.simpleCoords_.push_back(rec.coords);
  }
  for (const auto& rec : positive) {
    d.roots_.push_back(-rec.root);
    d.coroots_.push_back(-rec.coroot);
    d.simpleCoords_.push_back(-rec.coords);
  }
  for (std::size_t i = 0; i < d.roots_.size(); ++i) {
    d.rootLookup_.emplace(d.roots_[i], i);
    d.corootLookup_.emplace(d.coroots_[i], i);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (d.simpleCoords_[i] != [&] { IntVec e(n, 0); e[i] = 1; return e; }())
      throw Error(ErrorCode::InvalidType, "simple roots are not the height-one roots");
  return d;
}

std::string BasedRootDatum::label() const {
  if (family_.size() == 1) return family_ + std::to_string(numSimple_);
  return family_;
}

std::vector<std::size_t> BasedRootDatum::simpleIndices() const {
  std::vector<std::size_t> s(numSimple_);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Int BasedRootDatum::height(std::size_t i) const { return sum(simpleCoords_[i]); }

std::optional<std::size_t> BasedRootDatum::rootIndex(const IntVec& v) const {
  auto it = rootLookup_.find(v);
  if (it == rootLookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BasedRootDatum::corootIndex(const IntVec& v) const {
  auto it = corootLookup_.find(v);
  if (it == corootLookup_.end()) return std::nullopt;
  return it->second;
}

IntMatrix BasedRootDatum::cartanMatrix() const {
  IntMatrix c(numSimple_, numSimple_);
  for (std::size_t i = 0; i < numSimple_; ++i)
    for (std::size_t j = 0; j < numSimple_; ++j) c(i, j) = dot(roots_[i], coroots_[j]);
  return c;
}

IntVec BasedRootDatum::reflectChar(std::size_t i, const IntVec& x) const {
  return x - dot(x, coroots_[i]) * roots_[i];
}

IntVec BasedRootDatum::reflectCochar(std::size_t i, const IntVec& y) const {
  return y - dot(roots_[i], y) * coroots_[i];
}

IntMatrix BasedRootDatum::simpleReflectionChar(std::size_t i) const {
  IntMatrix m(rank_, rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    IntVec e(rank_, 0);
    e[j] = 1;
    const IntVec img = reflectChar(i, e);
    for (std::size_t k = 0; k < rank_; ++k) m(k, j) = img[k];
  }
  return m;
}

IntMatrix BasedRootDatum::simpleReflectionCochar(std::size_t i) const {
  IntMatrix m(rank_, rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    IntVec e(rank_, 0);
    e[j] = 1;
    const IntVec img = reflectCochar(i, e);
    for (std::size_t k = 0; k < rank_; ++k) m(k, j) = img[k];
  }
  return m;
}

std::optional<std::string> BasedRootDatum::validate() const {
  for (std::size_t a = 0; a < roots_.size(); ++a)
    if (dot(roots_[a], coroots_[a]) != 2) return "root " + std::to_string(a) + " pairs to != 2 with its coroot";
  for (std::size_t a = 0; a < roots_.size(); ++a)
    for (std::size_t b = 0; b < roots_.size(); ++b) {
      const IntVec img = roots_[b] - dot(roots_[b], coroots_[a]) * roots_[a];
      const IntVec cimg = coroots_[b] - dot(roots_[a], coroots_[b]) * coroots_[a];
      auto idx = rootIndex(img);
      if (!idx) return "reflection in root " + std::to_string(a) + " leaves the root set";
      if (coroots_[*idx] != cimg) return "coroot map is not reflection-equivariant";
    }
  const IntMatrix c = cartanMatrix();
  for (std::size_t i = 0; i < numSimple_; ++i)
    for (std::size_t j = 0; j < numSimple_; ++j) {
      if (i == j && c(i, j) != 2) return "Cartan diagonal entry != 2";
      if (i != j && c(i, j) > 0) return "positive off-diagonal Cartan entry";
    }
  return std::nullopt;
}

bool operator==(const BasedRootDatum& a, const BasedRootDatum& b) {
  return a.family_ == b.family_ && a.isogeny_ == b.isogeny_ && a.rank_ == b.rank_ &&
         a.numSimple_ == b.numSimple_ && a.roots_ == b.roots_ && a.coroots_ == b.coroots_;
}

IntMatrix cartanMatrixOfType(std::string_view family, int rank) {
  auto bad = [&] {
    return Error(ErrorCode::InvalidType, "unsupported type " + std::string(family) + std::to_string(rank));
  };
  if (family.size() != 1 || rank < 1 || rank > 8) throw bad();
  const char f = family[0];
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    c(i, j) = -1;
    c(j, i) = -1;
  };
  switch (f) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad();
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case 'C':
      if (n < 2) throw bad();
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case 'D':
      if (n < 3) throw bad();
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      if (n != 2) throw bad();
      c(0, 1) = -1;
      c(1, 0) = -3;
      break;
    default:
      throw bad();
  }
  return c;
}

DatumPtr buildFromType(std::string_view family, int rank, Isogeny isogeny) {
  const IntMatrix c = cartanMatrixOfType(family, rank);
  const auto n = static_cast<std::size_t>(rank);
  std::vector<IntVec> roots(n, IntVec(n, 0)), coroots(n, IntVec(n, 0));
  switch (isogeny) {
    case Isogeny::SimplyConnected:
      for (std::size_t i = 0; i < n; ++i) {
        roots[i] = c.row(i);
        coroots[i][i] = 1;
      }
      break;
    case Isogeny::Adjoint:
      for (std::size_t i = 0; i < n; ++i) {
        roots[i][i] = 1;
        coroots[i] = c.col(i);
      }
      break;
    case Isogeny::Other:
      throw Error(ErrorCode::InvalidType, "only simply-connected and adjoint data can be built from a type");
  }
  return std::make_shared<const BasedRootDatum>(
      BasedRootDatum::fromSimple(std::string(family), isogeny, std::move(roots), std::move(coroots)));
}

DatumPtr buildFromLabel(std::string_view label, Isogeny isogeny) {
  if (label.size() < 2) throw Error(ErrorCode::InvalidType, "bad type label '" + std::string(label) + "'");
  int rank = 0;
  for (char ch : label.substr(1)) {
    if (ch < '0' || ch > '9') throw Error(ErrorCode::InvalidType, "bad type label '" + std::string(label) + "'");
    rank = rank * 10 + (ch - '0');
  }
  return buildFromType(label.substr(0, 1), rank, isogeny);
}

DatumPtr dual(const BasedRootDatum& d) {
  std::string family = d.family();
  if (family == "B") family = "C";
  else if (family == "C") family = "B";
  Isogeny iso = d.isogeny();
  if (iso == Isogeny::SimplyConnected) iso = Isogeny::Adjoint;
  else if (iso == Isogeny::Adjoint) iso = Isogeny::SimplyConnected;
  std::vector<IntVec> roots, coroots;
  for (std::size_t i = 0; i < d.semisimpleRank(); ++i) {
    roots.push_back(d.coroot(i));
    coroots.push_back(d.root(i));
  }
  return std::make_shared<const BasedRootDatum>(
      BasedRootDatum::fromSimple(std::move(family), iso, std::move(roots), std::move(coroots)));
}

IntVec rhoCheckDouble(const BasedRootDatum& d) {
  IntVec s(d.rank(), 0);
  for (std::size_t i = 0; i < d.numPositive(); ++i) s = s + d.coroot(i);
  return s;
}

namespace {

bool matchesWithPermutation(const IntMatrix& c, const std::vector<std::size_t>& nodes, const IntMatrix& ref,
                            bool allowPermutation) {
  std::vector<std::size_t> p(nodes.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < nodes.size() && ok; ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j)
        if (c(nodes[p[i]], nodes[p[j]]) != ref(i, j)) {
          ok = false;
          break;
        }
    if (ok) return true;
    if (!allowPermutation) return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::string identifyComponent(const IntMatrix& c, const std::vector<std::size_t>& nodes) {
  const int k = static_cast<int>(nodes.size());
  static constexpr std::string_view kFamilies[] = {"A", "B", "C", "D", "G"};
  for (bool perm : {false, true})
    for (auto fam : kFamilies) {
      IntMatrix ref;
      try {
        ref = cartanMatrixOfType(fam, k);
      } catch (const Error&) {
        continue;
      }
      if (matchesWithPermutation(c, nodes, ref, perm)) return std::string(fam) + std::to_string(k);
    }
  return "?" + std::to_string(k);
}

}  // namespace

std::string identifyCartanType(const IntMatrix& cartan) {
  const std::size_t n = cartan.rows();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comps.emplace_back();
    std::deque<std::size_t> q{s};
    comp[s] = static_cast<int>(comps.size() - 1);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop_front();
      comps.back().push_back(v);
      for (std::size_t u = 0; u < n; ++u)
        if (comp[u] < 0 && (cartan(v, u) != 0 || cartan(u, v) != 0)) {
          comp[u] = comp[s];
          q.push_back(u);
        }
    }
  }
  std::string out;
  for (auto& nodes : comps) {
    std::sort(nodes.begin(), nodes.end());
    if (!out.empty()) out += "+";
    out += identifyComponent(cartan, nodes);
  }
  return out;
}

PinnedAutomorphism PinnedAutomorphism::fromPermutation(DatumPtr datum, std::vector<std::size_t> perm) {
  const BasedRootDatum& d = *datum;
  const std::size_t n = d.semisimpleRank();
  if (perm.size() != n) throw Error(ErrorCode::InvalidAutomorphism, "permutation size differs from semisimple rank");
  {
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != i) throw Error(ErrorCode::InvalidAutomorphism, "not a permutation of the simple nodes");
  }
  const IntMatrix c = d.cartanMatrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c(perm[i], perm[j]) != c(i, j))
        throw Error(ErrorCode::InvalidAutomorphism, "permutation does not preserve the Cartan matrix");
  if (d.rank() != n) throw Error(ErrorCode::InvalidAutomorphism, "data with a central torus are not supported");

  std::vector<IntVec> src, dst;
  for (std::size_t i = 0; i < n; ++i) {
    src.push_back(d.root(i));
    dst.push_back(d.root(perm[i]));
  }
  const IntMatrix S = IntMatrix::fromColumns(src, d.rank());
  const IntMatrix T = IntMatrix::fromColumns(dst, d.rank());
  auto sinv = rationalInverse(toRational(S));
  if (!sinv) throw Error(ErrorCode::InvalidAutomorphism, "simple roots are not a rational basis");
  IntMatrix M(d.rank(), d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j) {
      mpq_class v = 0;
      for (std::size_t k = 0; k < d.rank(); ++k) v += mpq_class(static_cast<long>(T(i, k))) * (*sinv)[k][j];
      if (v.get_den() != 1) throw Error(ErrorCode::InvalidAutomorphism, "diagram automorphism does not preserve the lattice");
      M(i, j) = v.get_num().get_si();
    }
  auto minv = integerInverse(M);
  if (!minv) throw Error(ErrorCode::InvalidAutomorphism, "lattice map is not invertible over Z");

  PinnedAutomorphism a;
  a.datum_ = std::move(datum);
  a.perm_ = std::move(perm);
  a.charMap_ = M;
  a.cocharMap_ = minv->transpose();
  for (std::size_t r = 0; r < d.numRoots(); ++r) {
    auto idx = d.rootIndex(M.apply(d.root(r)));
    if (!idx) throw Error(ErrorCode::InvalidAutomorphism, "lattice map does not permute the roots");
    if (d.coroot(*idx) != a.cocharMap_.apply(d.coroot(r)))
      throw Error(ErrorCode::InvalidAutomorphism, "lattice map is not compatible with coroots");
    a.rootPerm_.push_back(*idx);
  }
  return a;
}

PinnedAutomorphism PinnedAutomorphism::identity(DatumPtr datum) {
  std::vector<std::size_t> p(datum->semisimpleRank());
  std::iota(p.begin(), p.end(), 0);
  return fromPermutation(std::move(datum), std::move(p));
}

bool PinnedAutomorphism::isIdentity() const { return charMap_.isIdentity(); }

int PinnedAutomorphism::order() const {
  IntMatrix m = charMap_;
  int k = 1;
  while (!m.isIdentity()) {
    m = m * charMap_;
    ++k;
  }
  return k;
}

PinnedAutomorphism PinnedAutomorphism::compose(const PinnedAutomorphism& other) const {
  std::vector<std::size_t> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = perm_[other.perm_[i]];
  return fromPermutation(datum_, std::move(p));
}

PinnedAutomorphism PinnedAutomorphism::inverse() const {
  std::vector<std::size_t> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[perm_[i]] = i;
  return fromPermutation(datum_, std::move(p));
}

std::vector<std::vector<std::size_t>> diagramAutomorphisms(const BasedRootDatum& d) {
  const std::size_t n = d.semisimpleRank();
  const IntMatrix c = d.cartanMatrix();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c(p[i], p[j]) != c(i, j)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

nlohmann::json toJson(const BasedRootDatum& d) {
  nlohmann::json j;
  j["type"] = d.family();
  j["rank"] = d.rank();
  j["isogeny"] = std::string(to_string(d.isogeny()));
  j["roots"] = d.roots();
  j["coroots"] = d.coroots();
  j["simple"] = d.simpleIndices();
  return j;
}

DatumPtr datumFromJson(const nlohmann::json& j) {
  try {
    const auto roots = j.at("roots").get<std::vector<IntVec>>();
    const auto coroots = j.at("coroots").get<std::vector<IntVec>>();
    const auto simple = j.at("simple").get<std::vector<std::size_t>>();
    std::vector<IntVec> sr, sc;
    for (std::size_t i : simple) {
      sr.push_back(roots.at(i));
      sc.push_back(coroots.at(i));
    }
    auto d = std::make_shared<const BasedRootDatum>(BasedRootDatum::fromSimple(
        j.at("type").get<std::string>(), parseIsogeny(j.at("isogeny").get<std::string>()), sr, sc));
    if (d->rank() != j.at("rank").get<std::size_t>() || d->roots() != roots || d->coroots() != coroots)
      throw Error(ErrorCode::InvalidData, "serialized roots disagree with the regenerated datum");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidData, std::string("malformed datum JSON: ") + e.what());
  }
}

}  // namespace lgk
