#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "logtor/errors.hpp"
#include "logtor/quadext.hpp"
#include "logtor/rational.hpp"

namespace logtor {

// Dense matrix over an exact field K (Rational or QuadExt).  Values are
// immutable in spirit: every operation returns a fresh matrix, so instances
// can be shared across threads freely.
template <class K>
class MatrixT {
 public:
  MatrixT() : rows_(0), cols_(0) {}
  MatrixT(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, K(0)) {}
  MatrixT(std::initializer_list<std::initializer_list<K>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& v : row) e_.push_back(v);
    }
  }

  static MatrixT identity(std::size_t n) {
    MatrixT m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend bool operator==(const MatrixT& a, const MatrixT& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const MatrixT& a, const MatrixT& b) { return !(a == b); }

  MatrixT transpose() const {
    MatrixT t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  MatrixT operator*(const MatrixT& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    MatrixT p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<K> operator*(const std::vector<K>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  MatrixT operator+(const MatrixT& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    MatrixT s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
  }

  MatrixT scaled(const K& c) const {
    MatrixT s = *this;
    for (auto& v : s.e_) v = v * c;
    return s;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero_row(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero((*this)(i, j))) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> e_;
};

using Matrix = MatrixT<Rational>;

template <class K>
struct RrefResult {
  MatrixT<K> matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Unique reduced row echelon form: pivots 1, pivot columns strictly
// increasing and cleared above and below, zero rows trailing.
template <class K>
RrefResult<K> rref(MatrixT<K> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RrefResult<K> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(m(piv, c))) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

template <class K>
std::size_t rank(const MatrixT<K>& m) {
  return rref(m).rank;
}

// Right kernel basis, one column vector per free column of the RREF.
template <class K>
std::vector<std::vector<K>> kernel_basis(const MatrixT<K>& m) {
  RrefResult<K> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[free] = K(1);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.matrix(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
K determinant(MatrixT<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  K det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return K(0);
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    K inv = K(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      K f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

template <class K>
MatrixT<K> invert(const MatrixT<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  MatrixT<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  RrefResult<K> r = rref(std::move(aug));
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) throw SingularMatrixError();
  MatrixT<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
  return inv;
}

// Inverse of a symmetric matrix; the result is symmetric again.  Throws
// SingularMatrixError when det = 0, which signals a singular quadric.
template <class K>
MatrixT<K> invert_symmetric(const MatrixT<K>& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("invert_symmetric requires a symmetric matrix");
  return invert(m);
}

template <class K>
std::ostream& operator<<(std::ostream& os, const MatrixT<K>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "\n[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os;
}

}  // namespace logtor
