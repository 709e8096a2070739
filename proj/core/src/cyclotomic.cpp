#include "lgk/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "lgk/error.hpp"

namespace lgk {

namespace {

using Poly = std::vector<mpz_class>;  // ascending coefficients

Poly divideExact(Poly num, const Poly& den) {
  Poly q(num.size() - den.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class c = num[k + den.size() - 1] / den.back();
    q[k] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  return q;
}

Poly cyclotomicPolynomial(Int n, std::map<Int, Poly>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (Int d = 1; d < n; ++d)
    if (n % d == 0) p = divideExact(p, cyclotomicPolynomial(d, cache));
  cache[n] = p;
  return p;
}

bool allZero(const std::vector<mpq_class>& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace

CyclotomicField::CyclotomicField(Int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidData, "cyclotomic order must be positive");
  std::map<Int, Poly> cache;
  const Poly phi = cyclotomicPolynomial(n, cache);
  phi_ = phi.size() - 1;
  std::vector<mpq_class> cur(phi_, 0);
  cur[0] = 1;
  powers_.reserve(static_cast<std::size_t>(n));
  for (Int k = 0; k < n; ++k) {
    powers_.push_back(cur);
    // multiply by zeta and reduce with the monic polynomial
    mpq_class top = cur[phi_ - 1];
    for (std::size_t j = phi_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (sgn(top) != 0)
      for (std::size_t j = 0; j < phi_; ++j) cur[j] -= top * mpq_class(phi[j]);
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(Int n) {
  static std::mutex mu;
  static std::map<Int, std::shared_ptr<const CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = fields[n];
  if (!slot) slot = std::make_shared<const CyclotomicField>(n);
  return slot;
}

Cyc::Cyc(FieldPtr f) : f_(std::move(f)), c_(f_->degree(), 0) {}

Cyc::Cyc(FieldPtr f, const mpq_class& q) : Cyc(std::move(f)) { c_[0] = q; }

Cyc Cyc::zeta(FieldPtr f, Int k) {
  Cyc z(f);
  z.c_ = f->power(k);
  return z;
}

bool Cyc::isZero() const { return allZero(c_); }

bool Cyc::isOne() const {
  if (c_[0] != 1) return false;
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) return false;
  return true;
}

bool Cyc::isRational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (sgn(c_[j]) != 0) return false;
  return true;
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  r += o;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] -= o.c_[j];
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  CycAccumulator acc(f_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (sgn(o.c_[j]) != 0) acc.addZeta(c_[i] * o.c_[j], static_cast<Int>(i + j));
  }
  return acc.reduce();
}

Cyc Cyc::operator*(const mpq_class& q) const {
  Cyc r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

Cyc Cyc::galois(Int j) const {
  CycAccumulator acc(f_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) acc.addZeta(c_[i], checkedMul(static_cast<Int>(i), j));
  return acc.reduce();
}

Cyc Cyc::inverse() const {
  if (isZero()) throw Error(ErrorCode::InvalidData, "division by zero in cyclotomic field");
  if (isRational()) return Cyc(f_, 1 / c_[0]);
  Cyc others(f_, 1);
  for (Int j = 2; j < f_->order(); ++j)
    if (gcd(j, f_->order()) == 1) others = others * galois(j);
  const Cyc norm = *this * others;
  if (!norm.isRational()) throw Error(ErrorCode::InvalidData, "norm is not rational");
  return others * (1 / norm.c_[0]);
}

Cyc Cyc::pow(Int e) const {
  Cyc base = e < 0 ? inverse() : *this;
  Int k = e < 0 ? -e : e;
  Cyc r(f_, 1);
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[j].get_str();
    if (j > 0) os << "*z^" << j;
  }
  if (first) os << "0";
  return os.str();
}

CycAccumulator::CycAccumulator(FieldPtr f) : f_(std::move(f)), acc_(static_cast<std::size_t>(f_->order()), 0) {}

void CycAccumulator::addZeta(const mpq_class& q, Int k) { acc_[static_cast<std::size_t>(floorMod(k, f_->order()))] += q; }

void CycAccumulator::addShifted(const Cyc& x, Int k) {
  const auto& c = x.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j)
    if (sgn(c[j]) != 0) addZeta(c[j], k + static_cast<Int>(j));
}

Cyc CycAccumulator::reduce() const {
  Cyc r(f_);
  const std::size_t phi = f_->degree();
  for (std::size_t k = 0; k < acc_.size(); ++k) {
    if (sgn(acc_[k]) == 0) continue;
    if (k < phi) {
      r.c_[k] += acc_[k];
    } else {
      const auto& p = f_->power(static_cast<Int>(k));
      for (std::size_t j = 0; j < phi; ++j)
        if (sgn(p[j]) != 0) r.c_[j] += acc_[k] * p[j];
    }
  }
  return r;
}

void CycAccumulator::clear() {
  for (auto& x : acc_) x = 0;
}

FieldMatrix::FieldMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, Cyc(f_)) {}

FieldMatrix FieldMatrix::identity(FieldPtr f, std::size_t n) {
  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyc(f, 1);
  return m;
}

FieldMatrix FieldMatrix::unit(FieldPtr f, std::size_t n, std::size_t i, std::size_t j) {
  FieldMatrix m(f, n, n);
  m(i, j) = Cyc(f, 1);
  return m;
}

FieldMatrix FieldMatrix::fromInt(FieldPtr f, const IntMatrix& m) {
  FieldMatrix r(f, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Cyc(f, mpq_class(static_cast<long>(m(i, j))));
  return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  FieldMatrix r(f_, rows_, o.cols_);
  std::vector<bool> nz(o.data_.size());
  for (std::size_t k = 0; k < o.data_.size(); ++k) nz[k] = !o.data_[k].isZero();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Cyc& a = (*this)(i, k);
      if (a.isZero()) continue;
      const bool rational = a.isRational();
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!nz[k * o.cols_ + j]) continue;
        const Cyc& b = o(k, j);
        if (rational) r(i, j) += b * a.coeffs()[0];
        else r(i, j) += a * b;
      }
    }
  return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  FieldMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  FieldMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = r.data_[k] - o.data_[k];
  return r;
}

FieldMatrix FieldMatrix::operator*(const Cyc& s) const {
  FieldMatrix r = *this;
  for (auto& x : r.data_)
    if (!x.isZero()) x = x * s;
  return r;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool FieldMatrix::isZero() const {
  for (const auto& x : data_)
    if (!x.isZero()) return false;
  return true;
}

bool FieldMatrix::isIdentity() const { return rows_ == cols_ && *this == identity(f_, rows_); }

FieldMatrix FieldMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  FieldMatrix a = *this;
  FieldMatrix inv = identity(f_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).isZero()) ++p;
    if (p == n) throw Error(ErrorCode::InvalidData, "singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Cyc pivInv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).isZero()) a(c, j) = a(c, j) * pivInv;
      if (!inv(c, j).isZero()) inv(c, j) = inv(c, j) * pivInv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).isZero()) continue;
      const Cyc factor = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).isZero()) a(r, j) = a(r, j) - factor * a(c, j);
        if (!inv(c, j).isZero()) inv(r, j) = inv(r, j) - factor * inv(c, j);
      }
    }
  }
  return inv;
}

FieldMatrix FieldMatrix::expNilpotent() const {
  FieldMatrix result = identity(f_, rows_);
  FieldMatrix term = identity(f_, rows_);
  for (std::size_t k = 1; k <= rows_ + 1; ++k) {
    term = (term * *this) * Cyc(f_, mpq_class(1, static_cast<unsigned long>(k)));
    if (term.isZero()) return result;
    result = result + term;
  }
  throw Error(ErrorCode::InvalidData, "matrix is not nilpotent");
}

std::string FieldMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]\n";
  }
  return os.str();
}

FieldMatrix commutator(const FieldMatrix& a, const FieldMatrix& b) { return a * b - b * a; }

bool proportional(const FieldMatrix& a, const FieldMatrix& b, Cyc* lambda) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j).isZero()) continue;
      const Cyc l = a(i, j) * b(i, j).inverse();
      if (l.isZero()) return false;
      if (!(b * l == a)) return false;
      if (lambda) *lambda = l;
      return true;
    }
  return false;
}

}  // namespace lgk
