#pragma once

// Small dense integer matrices and the handful of exact linear-algebra
// routines the lattice code needs: integer kernels, rational solves and
// elimination over F2. Sizes never exceed 9x9, so everything is O(n^3)
// on int64 without overflow concerns for Weyl-group data.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace realweyl {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using Rational = boost::rational<Int>;
using RationalVec = std::vector<Rational>;

/// Error raised for invalid mathematical input (bad diagram, non-root, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error raised when an enumeration would exceed its configured cap.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("IntMatrix: column size mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const {
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  IntVec col(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  const std::vector<Int>& data() const noexcept { return data_; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  IntVec operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("IntMatrix: shape mismatch in apply");
    IntVec r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  IntMatrix operator+(const IntMatrix& o) const { return combine(o, 1); }
  IntMatrix operator-(const IntMatrix& o) const { return combine(o, -1); }
  IntMatrix operator-() const {
    IntMatrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  bool operator==(const IntMatrix& o) const = default;

  bool is_identity() const { return is_square() && *this == identity(rows_); }

 private:
  IntMatrix combine(const IntMatrix& o, Int sign) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += sign * o.data_[i];
    return r;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), Int{0});
}

inline IntVec operator+(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline IntVec operator-(IntVec a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline IntVec operator-(IntVec a) {
  for (auto& x : a) x = -x;
  return a;
}
inline IntVec operator*(Int s, IntVec a) {
  for (auto& x : a) x *= s;
  return a;
}

inline bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

inline IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec v(n, 0);
  v.at(i) = 1;
  return v;
}

/// Z-basis (as matrix columns) of the integer kernel {x : A x = 0}.
/// Column reduction with a unimodular transform; the transform columns that
/// end up multiplying zero columns form a saturated basis of the kernel.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(n);
  auto col_axpy = [&](std::size_t dst, std::size_t src, Int q) {
    for (std::size_t i = 0; i < m; ++i) h(i, dst) -= q * h(i, src);
    for (std::size_t i = 0; i < n; ++i) u(i, dst) -= q * u(i, src);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < m; ++i) std::swap(h(i, x), h(i, y));
    for (std::size_t i = 0; i < n; ++i) std::swap(u(i, x), u(i, y));
  };
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < m && pivot < n; ++r) {
    for (std::size_t j = pivot + 1; j < n; ++j) {
      while (h(r, j) != 0) {
        const Int q = h(r, pivot) / h(r, j);
        col_axpy(pivot, j, q);
        col_swap(pivot, j);
      }
    }
    if (h(r, pivot) != 0) ++pivot;
  }
  IntMatrix k(n, n - pivot);
  for (std::size_t j = pivot; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - pivot) = u(i, j);
  return k;
}

/// Rank over Q (fraction-free elimination).
inline std::size_t rational_rank(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c].numerator() == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || m[i][c].numerator() == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < a.cols(); ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Unique rational solution c of B c = x, for B of full column rank.
/// Returns nullopt if the system is inconsistent.
inline std::optional<RationalVec> solve_rational(const IntMatrix& b, const RationalVec& x) {
  const std::size_t n = b.rows(), k = b.cols();
  if (x.size() != n) throw std::invalid_argument("solve_rational: size mismatch");
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = b(i, j);
    m[i][k] = x[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && m[p][c].numerator() == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t j = c; j <= k; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][c].numerator() == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  if (pivot_cols.size() != k) throw std::invalid_argument("solve_rational: matrix not of full column rank");
  for (std::size_t i = row; i < n; ++i)
    if (m[i][k].numerator() != 0) return std::nullopt;
  RationalVec c(k);
  for (std::size_t r = 0; r < k; ++r) c[pivot_cols[r]] = m[r][k];
  return c;
}

/// Integer coordinates of x in the basis given by the columns of B, if x lies
/// in the lattice they span.
inline std::optional<IntVec> solve_integer(const IntMatrix& b, const IntVec& x) {
  RationalVec rx(x.begin(), x.end());
  auto c = solve_rational(b, rx);
  if (!c) return std::nullopt;
  IntVec out(c->size());
  for (std::size_t i = 0; i < c->size(); ++i) {
    if ((*c)[i].denominator() != 1) return std::nullopt;
    out[i] = (*c)[i].numerator();
  }
  return out;
}

/// Inverse of a unimodular or otherwise invertible integer matrix over Q.
inline std::vector<RationalVec> rational_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("rational_inverse: not square");
  const std::size_t n = a.rows();
  std::vector<RationalVec> cols;
  for (std::size_t j = 0; j < n; ++j) {
    RationalVec e(n, Rational(0));
    e[j] = 1;
    auto c = solve_rational(a, e);
    if (!c) throw std::invalid_argument("rational_inverse: singular matrix");
    cols.push_back(*c);
  }
  std::vector<RationalVec> inv(n, RationalVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = cols[j][i];
  return inv;
}

/// Absolute determinant via Bareiss elimination.
inline Int abs_determinant(IntMatrix a) {
  if (!a.is_square()) throw std::invalid_argument("abs_determinant: not square");
  const std::size_t n = a.rows();
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return prev < 0 ? -prev : prev;
}

// F2 linear algebra on bitmask vectors (bit i = coordinate i).

using F2Vec = std::uint32_t;

/// Row-echelon span over F2 that supports reduction modulo the span.
class F2Span {
 public:
  explicit F2Span(std::size_t dim) : dim_(dim) {}

  /// Inserts v; returns false if it was already in the span.
  bool insert(F2Vec v) {
    v = reduce(v);
    if (v == 0) return false;
    const int p = lowest_bit(v);
    for (auto& [piv, row] : rows_)
      if (row >> p & 1u) row ^= v;
    rows_.emplace_back(p, v);
    std::sort(rows_.begin(), rows_.end());
    return true;
  }

  /// Canonical representative of v modulo the span (pivot bits cleared).
  F2Vec reduce(F2Vec v) const {
    for (const auto& [piv, row] : rows_)
      if (v >> piv & 1u) v ^= row;
    return v;
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }

  /// Coordinates that are not pivots; they index a basis of F2^dim / span.
  std::vector<int> free_coordinates() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < dim_; ++i) {
      bool pivot = false;
      for (const auto& pr : rows_) pivot = pivot || pr.first == static_cast<int>(i);
      if (!pivot) out.push_back(static_cast<int>(i));
    }
    return out;
  }

 private:
  static int lowest_bit(F2Vec v) { return __builtin_ctz(v); }

  std::size_t dim_;
  std::vector<std::pair<int, F2Vec>> rows_;
};

inline F2Vec to_f2(const IntVec& v) {
  F2Vec out = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] % 2 != 0) out |= F2Vec{1} << i;
  return out;
}

}  // namespace realweyl
