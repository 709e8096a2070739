#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgk/weyl.hpp"

namespace lgk {

/// Element of K = mu_N x Z^(symbols), written zeta^k * prod x_s^{e_s}.
class KElem {
 public:
  KElem() = default;
  explicit KElem(Int n, Int zeta = 0, std::map<std::string, Int> free = {});

  static KElem one(Int n) { return KElem(n); }
  static KElem minusOne(Int n);
  /// zeta^{N/4}; requires 4 | N.
  static KElem i(Int n);
  static KElem symbol(Int n, const std::string& s, Int exp = 1);

  Int modulus() const { return n_; }
  Int zeta() const { return zeta_; }
  const std::map<std::string, Int>& free() const { return free_; }
  bool isOne() const { return zeta_ == 0 && free_.empty(); }
  bool isRootOfUnity() const { return free_.empty(); }
  /// Order of the root-of-unity part; meaningful when no free part is present.
  Int order() const;

  KElem operator*(const KElem& o) const;
  KElem inverse() const;
  KElem pow(Int e) const;

  friend bool operator==(const KElem& a, const KElem& b) = default;
  friend auto operator<=>(const KElem& a, const KElem& b) = default;

  std::string str() const;

 private:
  Int n_ = 24;
  Int zeta_ = 0;
  std::map<std::string, Int> free_;
};

nlohmann::json toJson(const KElem& k);
KElem kelemFromJson(const nlohmann::json& j, Int n);

/// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() : table_{{0}} {}
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t elementOrder(std::size_t a) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inv_;
};

/// Action of a finite group on K: zeta -> zeta^{m_g}, x_s -> image_g(s).
class CoeffAction {
 public:
  CoeffAction() = default;
  CoeffAction(FiniteGroup group, Int n, std::vector<Int> zetaMultipliers,
              std::vector<std::map<std::string, KElem>> symbolImages);

  static CoeffAction trivial(FiniteGroup group, Int n);

  const FiniteGroup& group() const { return group_; }
  Int modulus() const { return n_; }
  KElem apply(std::size_t g, const KElem& k) const;
  Int zetaMultiplier(std::size_t g) const { return mult_[g]; }

  /// Checks that every element acts by an automorphism and that the action
  /// respects the group law on the given symbols; returns an explanation on
  /// failure.
  std::optional<std::string> validate(const std::vector<std::string>& symbols) const;

 private:
  FiniteGroup group_;
  Int n_ = 24;
  std::vector<Int> mult_;
  std::vector<std::map<std::string, KElem>> images_;
};

/// Point of T(K) = X_* (x) K, one K-coordinate per cocharacter basis vector.
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(DatumPtr d, std::vector<KElem> coords);

  static TorusPoint identity(DatumPtr d, Int n);

  const DatumPtr& datum() const { return datum_; }
  const std::vector<KElem>& coords() const { return coords_; }
  Int modulus() const { return coords_.empty() ? 24 : coords_.front().modulus(); }
  bool isIdentity() const;

  TorusPoint operator*(const TorusPoint& o) const;
  TorusPoint inverse() const;
  /// Applies a lattice map on cocharacters (columns give images of basis vectors).
  TorusPoint mapCochar(const IntMatrix& m) const;
  TorusPoint weylAct(const WeylElem& w) const { return mapCochar(w.cocharMatrix()); }
  TorusPoint coeffAct(const CoeffAction& a, std::size_t g) const;

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) { return a.coords_ == b.coords_; }
  friend auto operator<=>(const TorusPoint& a, const TorusPoint& b) { return a.coords_ <=> b.coords_; }

 private:
  DatumPtr datum_;
  std::vector<KElem> coords_;
};

/// mu(x): coordinates x^{mu_i}.
TorusPoint evalCocharacter(const DatumPtr& d, const IntVec& mu, const KElem& x);
/// chi(t) = prod_i t_i^{chi_i}.
KElem evalRoot(const IntVec& chi, const TorusPoint& t);
/// Coefficient action of g followed by the lattice action of `twist`.
TorusPoint galoisAct(const CoeffAction& a, std::size_t g, const TorusPoint& t, const WeylElem& twist);

nlohmann::json toJson(const TorusPoint& t);

}  // namespace lgk
