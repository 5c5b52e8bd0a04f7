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

#ifndef KNOTSIG_POLYNOMIAL_HPP
#define KNOTSIG_POLYNOMIAL_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotsig/numeric.hpp"

namespace knotsig {

// Dense univariate polynomial over Z. coeff(k) is the coefficient of t^k;
// the zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(Int v) {
    IntPoly p;
    if (sgn(v) != 0) p.c_.push_back(std::move(v));
    return p;
  }

  // 1 - t^n
  static IntPoly one_minus_power(std::size_t n) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = 1;
    c[n] -= 1;  // handles n == 0 -> zero polynomial
    return IntPoly(std::move(c));
  }

  // t^n - 1
  static IntPoly power_minus_one(std::size_t n) { return -one_minus_power(n); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Int& coeff(std::size_t k) const {
    static const Int zero(0);
    return k < c_.size() ? c_[k] : zero;
  }
  const std::vector<Int>& coeffs() const { return c_; }

  const Int& leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Int eval(const Int& t0) const {  // Horner
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
  }

  Rational eval(const Rational& t0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
    return acc;
  }

  IntPoly operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  // Euclidean division by a divisor with unit leading coefficient, which is
  // the only case needed here (cyclotomics and 1 - t^k factors); quotient and
  // remainder then stay over Z.
  friend std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    const Int& lead = den.leading();
    if (lead != 1 && lead != -1)
      throw std::domain_error("polynomial division requires a unit leading coefficient");
    std::vector<Int> rem = num.c_;
    const int dd = den.degree();
    if (num.degree() < dd) return {IntPoly(), num};
    std::vector<Int> quo(num.c_.size() - dd, Int(0));
    for (int k = num.degree(); k >= dd; --k) {
      Int& top = rem[static_cast<std::size_t>(k)];
      if (sgn(top) == 0) continue;
      Int factor = (lead == 1) ? top : Int(-top);
      quo[static_cast<std::size_t>(k - dd)] = factor;
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(k - dd + j)] -= factor * den.c_[static_cast<std::size_t>(j)];
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
  }

  friend IntPoly divexact(const IntPoly& num, const IntPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
  }

  friend bool divides(const IntPoly& den, const IntPoly& num) {
    return divmod(num, den).second.is_zero();
  }

  std::string to_string() const {  // "a_n*t^n + ... + a_0" for diagnostics
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Int& a = c_[static_cast<std::size_t>(k)];
      if (sgn(a) == 0) continue;
      if (!first) os << (sgn(a) > 0 ? " + " : " - ");
      else if (sgn(a) < 0) os << "-";
      first = false;
      Int mag = abs(a);
      if (mag != 1 || k == 0) os << mag.get_str();
      if (k > 0) {
        if (mag != 1) os << "*";
        os << "t";
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

// Equality up to multiplication by +-t^k, the natural equivalence for
// Alexander polynomials computed from different Seifert matrices.
inline bool associate_equal(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::size_t la = 0, lb = 0;
  while (sgn(ca[la]) == 0) ++la;
  while (sgn(cb[lb]) == 0) ++lb;
  if (ca.size() - la != cb.size() - lb) return false;
  bool plus = true, minus = true;
  for (std::size_t i = 0; la + i < ca.size(); ++i) {
    if (ca[la + i] != cb[lb + i]) plus = false;
    if (ca[la + i] != -cb[lb + i]) minus = false;
  }
  return plus || minus;
}

// m-th cyclotomic polynomial via Phi_m = (t^m - 1) / prod_{d|m, d<m} Phi_d,
// filling in Phi_d for the divisors of m bottom-up.
inline IntPoly cyclotomic(unsigned long m) {
  if (m == 0) throw std::domain_error("cyclotomic index must be positive");
  std::vector<unsigned long> divisors;
  for (unsigned long d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::vector<IntPoly> phi(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    IntPoly p = IntPoly::power_minus_one(divisors[i]);
    for (std::size_t j = 0; j < i; ++j)
      if (divisors[i] % divisors[j] == 0) p = divexact(p, phi[j]);
    phi[i] = std::move(p);
  }
  return phi.back();
}

}  // namespace knotsig

#endif  // KNOTSIG_POLYNOMIAL_HPP
