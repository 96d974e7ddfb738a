#pragma once

// Arithmetic in GF(p) and dense matrices over it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spechtsym {

/// Raised when an exact identity that should hold by construction fails.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace gf {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

// Entries are kept below 2^16 so that a product fits in 32 bits and a row
// accumulation of up to 2^32 products fits in 64 bits.
inline constexpr std::uint32_t kMaxModulus = 65521;

inline void require_prime(std::uint32_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p > kMaxModulus)
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds " +
                                std::to_string(kMaxModulus));
}

inline Scalar reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<Scalar>(r < 0 ? r + p : r);
}

inline Scalar add(Scalar a, Scalar b, std::uint32_t p) {
  Scalar s = a + b;
  return s >= p ? s - p : s;
}
inline Scalar sub(Scalar a, Scalar b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
inline Scalar mul(Scalar a, Scalar b, std::uint32_t p) {
  return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
}
inline Scalar neg(Scalar a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline Scalar pow(Scalar a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1 % p, base = a % p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Scalar>(result);
}

inline Scalar inv(Scalar a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p) + ")");
  return pow(a, p - 2, p);
}

}  // namespace gf

/// A residue in [0, p) tagged with its prime modulus.
class FieldElement {
 public:
  FieldElement(long long value, std::uint32_t modulus)
      : value_(gf::reduce(value, modulus)), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const { return {gf::inv(value_, modulus_), modulus_}; }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    same_field(a, b);
    return {gf::add(a.value_, b.value_, a.modulus_), a.modulus_};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    same_field(a, b);
    return {gf::sub(a.value_, b.value_, a.modulus_), a.modulus_};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    same_field(a, b);
    return {gf::mul(a.value_, b.value_, a.modulus_), a.modulus_};
  }
  friend FieldElement operator-(FieldElement a) { return {gf::neg(a.value_, a.modulus_), a.modulus_}; }
  friend bool operator==(FieldElement a, FieldElement b) = default;
  friend std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.value_; }

 private:
  static void same_field(FieldElement a, FieldElement b) {
    if (a.modulus_ != b.modulus_) throw std::invalid_argument("field elements from different fields");
  }

  gf::Scalar value_;
  std::uint32_t modulus_;
};

/// C(d, a) mod p by Lucas' theorem; zero when a > d.
inline FieldElement binom_mod_p(std::uint64_t d, std::uint64_t a, std::uint32_t p) {
  gf::require_prime(p);
  std::uint64_t result = 1;
  while (a > 0 || d > 0) {
    std::uint64_t dd = d % p, ad = a % p;
    if (ad > dd) return {0, p};
    // digit binomial via the multiplicative formula; all factors are < p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ad; ++i) {
      num = num * ((dd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    result = result * num % p * gf::inv(static_cast<gf::Scalar>(den), p) % p;
    d /= p;
    a /= p;
  }
  return {static_cast<long long>(result), p};
}

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged row list");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = gf::reduce(rows[i][j], p);
    }
    return m;
  }

  static Matrix from_columns(const std::vector<gf::Vector>& cols, std::size_t rows, std::uint32_t p) {
    Matrix m(rows, cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  gf::Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  gf::Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<gf::Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const gf::Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  gf::Vector column(std::size_t j) const {
    gf::Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (auto v : data_)
      if (v) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  /// Returns the scalar c if this matrix equals c times the identity.
  std::optional<gf::Scalar> scalar_value() const {
    if (rows_ != cols_) return std::nullopt;
    gf::Scalar c = rows_ ? (*this)(0, 0) : 0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? c : 0u)) return std::nullopt;
    return c;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (auto v : data_) n += v != 0;
    return n;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(gf::Scalar c) const {
    Matrix m = *this;
    for (auto& v : m.data_) v = gf::mul(v, c, p_);
    return m;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    Matrix m(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix m(row_idx.size(), col_idx.size(), p_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) m(i, j) = (*this)(row_idx[i], col_idx[j]);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = gf::add(a.data_[k], b.data_[k], a.p_);
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = gf::sub(a.data_[k], b.data_[k], a.p_);
    return c;
  }

  // Sparse-aware product: cost is nnz(A) times the mean nnz of a row of B.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    if (a.p_ != b.p_) throw std::invalid_argument("matrix product modulus mismatch");
    const std::uint32_t p = a.p_;
    std::vector<std::size_t> start(b.rows_ + 1, 0);
    std::vector<std::pair<std::size_t, gf::Scalar>> entries;
    for (std::size_t k = 0; k < b.rows_; ++k) {
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (auto v = b(k, j)) entries.emplace_back(j, v);
      start[k + 1] = entries.size();
    }
    Matrix c(a.rows_, b.cols_, p);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      bool any = false;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t av = a(i, k);
        if (!av) continue;
        any = true;
        for (std::size_t e = start[k]; e < start[k + 1]; ++e) acc[entries[e].first] += av * entries[e].second;
      }
      if (!any) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<gf::Scalar>(acc[j] % p);
    }
    return c;
  }

  friend gf::Vector operator*(const Matrix& a, const gf::Vector& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    gf::Vector y(a.rows_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < a.cols_; ++j) acc += static_cast<std::uint64_t>(a(i, j)) * x[j];
      y[i] = static_cast<gf::Scalar>(acc % a.p_);
    }
    return y;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << '\n';
    }
    return os;
  }

 private:
  static void same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.p_ != b.p_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<gf::Scalar> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

inline Echelon rref(Matrix m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const gf::Scalar iv = gf::inv(m(r, c), p);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = gf::mul(m(r, j), iv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const gf::Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j)) m(i, j) = gf::sub(m(i, j), gf::mul(f, m(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of { v : M v = 0 }, one vector per free column with a 1 there and
/// zeros at the other free columns.
inline std::vector<gf::Vector> kernel_basis(const Matrix& m) {
  const std::uint32_t p = m.modulus();
  const auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<gf::Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    gf::Vector v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = gf::neg(red(i, f), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A solution of A x = b with all free variables set to zero, or nullopt.
inline std::optional<gf::Vector> solve(const Matrix& a, const gf::Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  Matrix aug(a.rows(), a.cols() + 1, a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i] % a.modulus();
  }
  const auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  gf::Vector x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [red, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return red.block(0, n, n, n);
}

inline gf::Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::uint32_t p = m.modulus();
  const std::size_t n = m.rows();
  gf::Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = gf::neg(det, p);
    }
    det = gf::mul(det, m(c, c), p);
    const gf::Scalar iv = gf::inv(m(c, c), p);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (!m(i, c)) continue;
      const gf::Scalar f = gf::mul(m(i, c), iv, p);
      for (std::size_t j = c; j < n; ++j) m(i, j) = gf::sub(m(i, j), gf::mul(f, m(c, j), p), p);
    }
  }
  return det;
}

/// Coefficients of det(xI - M), constant term first, via Hessenberg reduction.
inline gf::Vector characteristic_polynomial(Matrix h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::uint32_t p = h.modulus();
  const std::size_t n = h.rows();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(i, k), h(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, i), h(k, j + 1));
    }
    const gf::Scalar iv = gf::inv(h(j + 1, j), p);
    for (std::size_t k = j + 2; k < n; ++k) {
      const gf::Scalar u = gf::mul(h(k, j), iv, p);
      if (!u) continue;
      for (std::size_t c = 0; c < n; ++c) h(k, c) = gf::sub(h(k, c), gf::mul(u, h(j + 1, c), p), p);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = gf::add(h(r, j + 1), gf::mul(u, h(r, k), p), p);
    }
  }
  // chi_{m+1} = (x - h_mm) chi_m - sum_{i<m} (prod_{k=i+1}^{m} h_{k,k-1}) h_{i,m} chi_i
  std::vector<gf::Vector> chi(n + 1);
  chi[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    gf::Vector next(m + 2, 0);
    for (std::size_t k = 0; k <= m; ++k) {
      next[k + 1] = gf::add(next[k + 1], chi[m][k], p);
      next[k] = gf::sub(next[k], gf::mul(h(m, m), chi[m][k], p), p);
    }
    gf::Scalar prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = gf::mul(prod, h(i + 1, i), p);
      const gf::Scalar f = gf::mul(prod, h(i, m), p);
      if (!f) continue;
      for (std::size_t k = 0; k < chi[i].size(); ++k) next[k] = gf::sub(next[k], gf::mul(f, chi[i][k], p), p);
    }
    chi[m + 1] = std::move(next);
  }
  return chi[n];
}

}  // namespace spechtsym
