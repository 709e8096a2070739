#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "lgk/intmat.hpp"

namespace lgk {

/// Q(zeta_N) with the power basis 1, zeta, ..., zeta^{phi(N)-1}.
class CyclotomicField {
 public:
  /// Shared instance per order.
  static std::shared_ptr<const CyclotomicField> get(Int n);

  Int order() const { return n_; }
  std::size_t degree() const { return phi_; }
  /// Reduced coordinates of zeta^k, 0 <= k < N.
  const std::vector<mpq_class>& power(Int k) const { return powers_[static_cast<std::size_t>(floorMod(k, n_))]; }

  explicit CyclotomicField(Int n);

 private:
  Int n_;
  std::size_t phi_;
  std::vector<std::vector<mpq_class>> powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Exact element of Q(zeta_N).
class Cyc {
 public:
  Cyc() = default;
  explicit Cyc(FieldPtr f);
  Cyc(FieldPtr f, const mpq_class& q);

  static Cyc zeta(FieldPtr f, Int k);

  const FieldPtr& field() const { return f_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool isZero() const;
  bool isOne() const;
  bool isRational() const;

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator*(const mpq_class& q) const;
  Cyc& operator+=(const Cyc& o);
  /// Image under zeta -> zeta^j, gcd(j, N) = 1.
  Cyc galois(Int j) const;
  /// Throws InvalidData on zero.
  Cyc inverse() const;
  Cyc pow(Int e) const;

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  FieldPtr f_;
  std::vector<mpq_class> c_;
  friend class CycAccumulator;
};

/// Sums of terms q * zeta^k kept unreduced until the end.
class CycAccumulator {
 public:
  explicit CycAccumulator(FieldPtr f);
  /// Adds x * zeta^k.
  void addShifted(const Cyc& x, Int k);
  void addZeta(const mpq_class& q, Int k);
  Cyc reduce() const;
  void clear();

 private:
  FieldPtr f_;
  std::vector<mpq_class> acc_;
};

/// Dense square-or-rectangular matrix over Q(zeta_N).
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr f, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(FieldPtr f, std::size_t n);
  static FieldMatrix unit(FieldPtr f, std::size_t n, std::size_t i, std::size_t j);
  static FieldMatrix fromInt(FieldPtr f, const IntMatrix& m);

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Cyc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Cyc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator*(const Cyc& s) const;
  FieldMatrix transpose() const;
  bool isZero() const;
  bool isIdentity() const;
  /// Throws InvalidData when singular.
  FieldMatrix inverse() const;
  /// exp of a nilpotent matrix.
  FieldMatrix expNilpotent() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  FieldPtr f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyc> data_;
};

FieldMatrix commutator(const FieldMatrix& a, const FieldMatrix& b);
/// a = lambda * b for some scalar lambda (both nonzero).
bool proportional(const FieldMatrix& a, const FieldMatrix& b, Cyc* lambda = nullptr);

}  // namespace lgk
