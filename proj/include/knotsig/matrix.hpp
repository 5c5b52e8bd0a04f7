// Copyright 2026 The Knotsig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KNOTSIG_MATRIX_HPP
#define KNOTSIG_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotsig/numeric.hpp"
#include "knotsig/polynomial.hpp"

namespace knotsig {

// Dense integer matrix, just enough linear algebra for Seifert forms.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    a.require_same_shape(b);
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] += b.a_[k];
    return c;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    a.require_same_shape(b);
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.a_.size(); ++k) c.a_[k] -= b.a_[k];
    return c;
  }

  friend IntMatrix operator*(const Int& s, const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& v : c.a_) v *= s;
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void require_same_shape(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// Exact determinant by Bareiss fraction-free elimination with row pivoting.
// The empty matrix has determinant 1.
inline Int determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return Int(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

// det(A + t*B) as an exact integer polynomial, recovered from n+1 integer
// evaluations by Lagrange interpolation over Q.
inline IntPoly matrix_pencil_determinant(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("pencil determinant needs equal square matrices");
  const std::size_t n = a.rows();
  if (n == 0) return IntPoly::constant(Int(1));

  const long lo = -static_cast<long>(n / 2);
  std::vector<long> points(n + 1);
  std::vector<Int> values(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    points[k] = lo + static_cast<long>(k);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j) + Int(points[k]) * b(i, j);
    values[k] = determinant(std::move(m));
  }

  // Lagrange basis accumulation over Q; the result must land back in Z.
  std::vector<Rational> acc(n + 1, Rational(0));
  std::vector<Rational> basis;
  for (std::size_t k = 0; k <= n; ++k) {
    basis.assign(1, Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis.push_back(Rational(0));
      for (std::size_t d = basis.size() - 1; d > 0; --d)
        basis[d] = basis[d - 1] - Rational(points[j]) * basis[d];
      basis[0] *= Rational(-points[j]);
      denom *= Rational(points[k]) - Rational(points[j]);
    }
    const Rational scale = Rational(values[k]) / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += basis[d] * scale;
  }

  std::vector<Int> coeffs(n + 1);
  for (std::size_t d = 0; d <= n; ++d) {
    Rational c = acc[d];
    c.canonicalize();
    if (c.get_den() != 1)
      throw std::logic_error("pencil determinant interpolation left a fraction");
    coeffs[d] = c.get_num();
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace knotsig

#endif  // KNOTSIG_MATRIX_HPP
