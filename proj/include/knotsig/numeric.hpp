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

#ifndef KNOTSIG_NUMERIC_HPP
#define KNOTSIG_NUMERIC_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>

namespace knotsig {

// Exact arithmetic carriers. All invariant-bearing values in this library
// (breakpoints, jumps, L2 signatures, Mordell sums) are Int or Rational;
// floating point appears only inside the certified-inertia evaluator.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Int(num), Int(den));
}

// Canonical "num/den" form, always with an explicit denominator.
inline std::string fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Deterministic decimal rendering for report fields.
inline std::string decimal_string(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", r.get_d());
  return buf;
}

// Accepts "a/b" or "a".
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r{Int(text)};
      r.canonicalize();
      return r;
    }
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

inline std::optional<Int> exact_sqrt(const Int& value) {
  if (sgn(value) < 0) return std::nullopt;
  Int root = sqrt(value);
  if (root * root == value) return root;
  return std::nullopt;
}

// A point omega = e^{2 pi i x} of the unit circle, held as the exact
// rational x in [0,1). mpq canonicalization keeps it in lowest terms.
class UnitCirclePoint {
 public:
  UnitCirclePoint() : x_(0) {}

  explicit UnitCirclePoint(Rational x) : x_(std::move(x)) {
    x_.canonicalize();
    if (x_ < 0 || x_ >= 1) throw std::domain_error("circle point outside [0,1)");
  }

  UnitCirclePoint(long num, long den) : UnitCirclePoint(make_rational(num, den)) {}

  // Reduces an arbitrary rational angle mod 1.
  static UnitCirclePoint wrapped(Rational x) {
    x.canonicalize();
    Int whole = x.get_num() / x.get_den();  // truncated quotient
    x -= Rational(whole);
    if (x < 0) x += 1;
    return UnitCirclePoint(std::move(x));
  }

  const Rational& value() const { return x_; }
  Int numerator() const { return x_.get_num(); }
  Int denominator() const { return x_.get_den(); }
  bool is_zero() const { return sgn(x_) == 0; }

  // Complex conjugation: x -> 1-x on (0,1), fixing 0.
  UnitCirclePoint reflected() const {
    if (is_zero()) return *this;
    return UnitCirclePoint(Rational(1) - x_);
  }

  friend bool operator==(const UnitCirclePoint& a, const UnitCirclePoint& b) {
    return a.x_ == b.x_;
  }
  friend bool operator<(const UnitCirclePoint& a, const UnitCirclePoint& b) {
    return a.x_ < b.x_;
  }

 private:
  Rational x_;
};

}  // namespace knotsig

#endif  // KNOTSIG_NUMERIC_HPP
