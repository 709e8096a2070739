#include "lgk/torus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lgk/error.hpp"

namespace lgk {

KElem::KElem(Int n, Int zeta, std::map<std::string, Int> free) : n_(n), zeta_(floorMod(zeta, n)), free_(std::move(free)) {
  if (n <= 0 || n % 2 != 0) throw Error(ErrorCode::InvalidData, "cyclotomic order must be positive and even");
  std::erase_if(free_, [](const auto& kv) { return kv.second == 0; });
}

KElem KElem::minusOne(Int n) { return KElem(n, n / 2); }

KElem KElem::i(Int n) {
  if (n % 4 != 0) throw Error(ErrorCode::InvalidData, "a square root of -1 needs 4 | N");
  return KElem(n, n / 4);
}

KElem KElem::symbol(Int n, const std::string& s, Int exp) { return KElem(n, 0, {{s, exp}}); }

Int KElem::order() const { return n_ / gcd(zeta_, n_); }

KElem KElem::operator*(const KElem& o) const {
  if (n_ != o.n_) throw Error(ErrorCode::InvalidData, "K elements with different cyclotomic orders");
  std::map<std::string, Int> f = free_;
  for (const auto& [s, e] : o.free_) f[s] = checkedAdd(f[s], e);
  return KElem(n_, zeta_ + o.zeta_, std::move(f));
}

KElem KElem::inverse() const {
  std::map<std::string, Int> f;
  for (const auto& [s, e] : free_) f[s] = -e;
  return KElem(n_, -zeta_, std::move(f));
}

KElem KElem::pow(Int e) const {
  std::map<std::string, Int> f;
  for (const auto& [s, x] : free_) f[s] = checkedMul(x, e);
  return KElem(n_, floorMod(checkedMul(zeta_, floorMod(e, n_)), n_), std::move(f));
}

std::string KElem::str() const {
  std::ostringstream os;
  os << "z^" << zeta_;
  for (const auto& [s, e] : free_) os << "*" << s << "^" << e;
  return os.str();
}

nlohmann::json toJson(const KElem& k) {
  nlohmann::json f = nlohmann::json::object();
  for (const auto& [s, e] : k.free()) f[s] = e;
  return {{"zeta", k.zeta()}, {"free", f}};
}

KElem kelemFromJson(const nlohmann::json& j, Int n) {
  std::map<std::string, Int> f;
  if (j.contains("free"))
    for (const auto& [s, e] : j.at("free").items()) f[s] = e.get<Int>();
  return KElem(n, j.value("zeta", Int{0}), std::move(f));
}

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error(ErrorCode::InvalidData, "empty group");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw Error(ErrorCode::InvalidData, "multiplication table is not square");
    if (table_[0][a] != a || table_[a][0] != a) throw Error(ErrorCode::InvalidData, "element 0 is not the identity");
    std::set<std::size_t> row(table_[a].begin(), table_[a].end());
    if (row.size() != n || *row.rbegin() >= n) throw Error(ErrorCode::InvalidData, "table row is not a permutation");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw Error(ErrorCode::InvalidData, "multiplication is not associative");
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == 0) inv_[a] = b;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::elementOrder(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

CoeffAction::CoeffAction(FiniteGroup group, Int n, std::vector<Int> zetaMultipliers,
                         std::vector<std::map<std::string, KElem>> symbolImages)
    : group_(std::move(group)), n_(n), mult_(std::move(zetaMultipliers)), images_(std::move(symbolImages)) {
  if (mult_.size() != group_.order() || images_.size() != group_.order())
    throw Error(ErrorCode::InvalidData, "coefficient action size differs from group order");
  for (Int m : mult_)
    if (gcd(floorMod(m, n_), n_) != 1) throw Error(ErrorCode::InvalidData, "zeta multiplier is not a unit mod N");
}

CoeffAction CoeffAction::trivial(FiniteGroup group, Int n) {
  const std::size_t k = group.order();
  return CoeffAction(std::move(group), n, std::vector<Int>(k, 1), std::vector<std::map<std::string, KElem>>(k));
}

KElem CoeffAction::apply(std::size_t g, const KElem& k) const {
  KElem out(n_, checkedMul(k.zeta(), mult_[g]));
  for (const auto& [s, e] : k.free()) {
    auto it = images_[g].find(s);
    const KElem img = it == images_[g].end() ? KElem::symbol(n_, s) : it->second;
    out = out * img.pow(e);
  }
  return out;
}

std::optional<std::string> CoeffAction::validate(const std::vector<std::string>& symbols) const {
  std::vector<KElem> probes{KElem(n_, 1)};
  for (const auto& s : symbols) probes.push_back(KElem::symbol(n_, s));
  for (std::size_t a = 0; a < group_.order(); ++a)
    for (std::size_t b = 0; b < group_.order(); ++b)
      for (const auto& p : probes)
        if (apply(a, apply(b, p)) != apply(group_.mul(a, b), p))
          return "coefficient action is not a group action on " + p.str();
  for (const auto& p : probes)
    if (apply(0, p) != p) return "identity acts nontrivially";
  return std::nullopt;
}

TorusPoint::TorusPoint(DatumPtr d, std::vector<KElem> coords) : datum_(std::move(d)), coords_(std::move(coords)) {
  if (coords_.size() != datum_->rank()) throw Error(ErrorCode::DimensionMismatch, "torus point coordinates");
}

TorusPoint TorusPoint::identity(DatumPtr d, Int n) {
  const std::size_t r = d->rank();
  return TorusPoint(std::move(d), std::vector<KElem>(r, KElem::one(n)));
}

bool TorusPoint::isIdentity() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const KElem& k) { return k.isOne(); });
}

TorusPoint TorusPoint::operator*(const TorusPoint& o) const {
  requireSameDatum(datum_, o.datum_);
  std::vector<KElem> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * o.coords_[i];
  return TorusPoint(datum_, std::move(c));
}

TorusPoint TorusPoint::inverse() const {
  std::vector<KElem> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i].inverse();
  return TorusPoint(datum_, std::move(c));
}

TorusPoint TorusPoint::mapCochar(const IntMatrix& m) const {
  const Int n = modulus();
  std::vector<KElem> c(coords_.size(), KElem::one(n));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (m(i, j) != 0) c[i] = c[i] * coords_[j].pow(m(i, j));
  return TorusPoint(datum_, std::move(c));
}

TorusPoint TorusPoint::coeffAct(const CoeffAction& a, std::size_t g) const {
  std::vector<KElem> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.apply(g, coords_[i]);
  return TorusPoint(datum_, std::move(c));
}

TorusPoint evalCocharacter(const DatumPtr& d, const IntVec& mu, const KElem& x) {
  if (mu.size() != d->rank()) throw Error(ErrorCode::DimensionMismatch, "cocharacter length");
  std::vector<KElem> c(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) c[i] = x.pow(mu[i]);
  return TorusPoint(d, std::move(c));
}

KElem evalRoot(const IntVec& chi, const TorusPoint& t) {
  if (chi.size() != t.coords().size()) throw Error(ErrorCode::DimensionMismatch, "character length");
  KElem out = KElem::one(t.modulus());
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (chi[i] != 0) out = out * t.coords()[i].pow(chi[i]);
  return out;
}

TorusPoint galoisAct(const CoeffAction& a, std::size_t g, const TorusPoint& t, const WeylElem& twist) {
  return t.coeffAct(a, g).weylAct(twist);
}

nlohmann::json toJson(const TorusPoint& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& k : t.coords()) j.push_back(toJson(k));
  return j;
}

}  // namespace lgk
