#include "lgk/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "lgk/error.hpp"

namespace lgk {

Int checkedAdd(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer addition");
  return r;
}

Int checkedMul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer multiplication");
  return r;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checkedAdd(s, checkedMul(a[i], b[i]));
  return s;
}

Int floorMod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checkedMul(a / gcd(a, b), b < 0 ? -b : b);
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checkedAdd(a[i], b[i]);
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) { return a + (-b); }

IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec operator*(Int k, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checkedMul(k, a[i]);
  return r;
}

bool isZero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "matrix data size");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::fromColumns(const std::vector<IntVec>& cols, std::size_t height) {
  IntMatrix m(height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != height) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
    for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntVec IntMatrix::apply(std::span<const Int> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  IntVec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = checkedAdd(s, checkedMul((*this)(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::isIdentity() const { return rows_ == cols_ && *this == identity(rows_); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = checkedAdd(r(i, j), checkedMul(x, b(k, j)));
    }
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  IntMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = checkedAdd(a.data_[i], -b.data_[i]);
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  IntMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = checkedAdd(a.data_[i], b.data_[i]);
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix power(const IntMatrix& m, Int k) {
  if (k < 0) {
    auto inv = integerInverse(m);
    if (!inv) throw Error(ErrorCode::InvalidData, "negative power of a non-unimodular matrix");
    return power(*inv, -k);
  }
  IntMatrix r = IntMatrix::identity(m.rows());
  IntMatrix b = m;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

RatMatrix toRational(const IntMatrix& m) {
  RatMatrix r(m.rows(), RatVec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = mpq_class(static_cast<long>(m(i, j)));
  return r;
}

std::optional<RatMatrix> rationalInverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  RatMatrix inv(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const mpq_class piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

std::optional<IntMatrix> integerInverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto inv = rationalInverse(toRational(m));
  if (!inv) return std::nullopt;
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = (*inv)[i][j];
      if (q.get_den() != 1) return std::nullopt;
      r(i, j) = q.get_num().get_si();
    }
  return r;
}

std::optional<RatVec> rationalSolve(const IntMatrix& m, std::span<const Int> b) {
  auto inv = rationalInverse(toRational(m));
  if (!inv) return std::nullopt;
  RatVec x(m.cols(), 0);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) x[i] += (*inv)[i][j] * mpq_class(static_cast<long>(b[j]));
  return x;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix a = toRational(m);
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det.get_num().get_si();
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

void swapRows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swapCols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row a += k * row b
void addRow(IntMatrix& m, std::size_t a, std::size_t b, Int k) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = checkedAdd(m(a, j), checkedMul(k, m(b, j)));
}
void addCol(IntMatrix& m, std::size_t a, std::size_t b, Int k) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) = checkedAdd(m(i, a), checkedMul(k, m(i, b)));
}

}  // namespace

SmithForm smithNormalForm(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix D = a;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = m, pj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Int v = std::abs(D(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (best == 0) break;
      if (pi != t) {
        swapRows(D, pi, t);
        swapRows(U, pi, t);
      }
      if (pj != t) {
        swapCols(D, pj, t);
        swapCols(V, pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        const Int q = D(i, t) / D(t, t);
        if (q != 0) {
          addRow(D, i, t, -q);
          addRow(U, i, t, -q);
        }
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        const Int q = D(t, j) / D(t, t);
        if (q != 0) {
          addCol(D, j, t, -q);
          addCol(V, j, t, -q);
        }
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            addRow(D, t, i, 1);
            addRow(U, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
  }
  return {U, D, V};
}

std::vector<IntVec> integerKernel(const IntMatrix& a) {
  const SmithForm s = smithNormalForm(a);
  std::vector<IntVec> basis;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const bool zero = j >= s.D.rows() || s.D(j, j) == 0;
    if (zero) basis.push_back(s.V.col(j));
  }
  return basis;
}

}  // namespace lgk
