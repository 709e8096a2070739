#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lgk {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

Int checkedAdd(Int a, Int b);
Int checkedMul(Int a, Int b);
Int dot(std::span<const Int> a, std::span<const Int> b);
Int floorMod(Int a, Int m);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(Int k, const IntVec& a);
bool isZero(std::span<const Int> v);

/// Dense row-major integer matrix. Lattice maps act on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data);

  static IntMatrix identity(std::size_t n);
  static IntMatrix fromRows(const std::vector<IntVec>& rows);
  static IntMatrix fromColumns(const std::vector<IntVec>& cols, std::size_t height);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  IntVec apply(std::span<const Int> v) const;
  IntMatrix transpose() const;
  bool isIdentity() const;

  const std::vector<Int>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix power(const IntMatrix& m, Int k);

using RatVec = std::vector<mpq_class>;
using RatMatrix = std::vector<RatVec>;

RatMatrix toRational(const IntMatrix& m);
/// Inverse over Q; nullopt when singular.
std::optional<RatMatrix> rationalInverse(const RatMatrix& m);
/// Inverse over Z; nullopt when not unimodular.
std::optional<IntMatrix> integerInverse(const IntMatrix& m);
/// Solves m x = b over Q; nullopt when no unique solution.
std::optional<RatVec> rationalSolve(const IntMatrix& m, std::span<const Int> b);
Int determinant(const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (d_i >= 0).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Int> diagonal() const;
};

SmithForm smithNormalForm(const IntMatrix& a);

/// Basis (as rows) of the kernel lattice {x in Z^n : A x = 0}.
std::vector<IntVec> integerKernel(const IntMatrix& a);

}  // namespace lgk
