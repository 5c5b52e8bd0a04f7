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

#ifndef KNOTSIG_INTERVAL_HPP
#define KNOTSIG_INTERVAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "knotsig/numeric.hpp"

namespace knotsig {

// RAII wrapper for a single mpfr number.
class MpfrFloat {
 public:
  explicit MpfrFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  MpfrFloat(const MpfrFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpfrFloat(MpfrFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  MpfrFloat& operator=(const MpfrFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpfrFloat& operator=(MpfrFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpfrFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Closed real interval [lo, hi] with outward-rounded endpoint arithmetic.
// Every operation encloses the exact real result, so a sign certified by
// an Interval is a proof at any precision.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec), prec_(prec) {}

  static Interval from_int(const Int& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
    return r;
  }

  static Interval from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
    return r;
  }

  static Interval from_rational(const Rational& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.get(), v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), v.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_.get(); }
  mpfr_srcptr hi() const { return hi_.get(); }
  mpfr_ptr lo() { return lo_.get(); }
  mpfr_ptr hi() { return hi_.get(); }

  // -1, +1 when certified; 0 when the interval straddles or touches zero.
  int sign() const {
    if (mpfr_sgn(lo_.get()) > 0) return 1;
    if (mpfr_sgn(hi_.get()) < 0) return -1;
    return 0;
  }

  bool contains_zero() const { return sign() == 0; }

  // Distance from zero (0 when uncertified); approximate, for pivot ranking.
  double mignitude() const {
    if (sign() == 0) return 0.0;
    const double a = std::abs(mpfr_get_d(lo_.get(), MPFR_RNDN));
    const double b = std::abs(mpfr_get_d(hi_.get(), MPFR_RNDN));
    return std::min(a, b);
  }

  friend Interval operator-(const Interval& a) {
    Interval r(a.prec_);
    mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(a.prec_);
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(a.prec_);
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    Interval r(a.prec_);
    MpfrFloat t(a.prec_);
    mpfr_mul(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_mul(t.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_mul(t.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);

    mpfr_mul(r.hi_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    return r;
  }

  // Division requires a divisor with certified sign.
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.sign() == 0) throw std::domain_error("interval division by interval containing zero");
    Interval r(a.prec_);
    MpfrFloat t(a.prec_);
    mpfr_div(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_div(t.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_div(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
    mpfr_div(t.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);

    mpfr_div(r.hi_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDU);
    mpfr_div(t.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_div(t.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    mpfr_div(t.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
    return r;
  }

  // Exact scaling by an integer.
  Interval scaled(const Int& s) const {
    Interval r(prec_);
    if (sgn(s) >= 0) {
      mpfr_mul_z(r.lo_.get(), lo_.get(), s.get_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(r.hi_.get(), hi_.get(), s.get_mpz_t(), MPFR_RNDU);
    } else {
      mpfr_mul_z(r.lo_.get(), hi_.get(), s.get_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(r.hi_.get(), lo_.get(), s.get_mpz_t(), MPFR_RNDU);
    }
    return r;
  }

  double midpoint_d() const {
    return 0.5 * (mpfr_get_d(lo_.get(), MPFR_RNDN) + mpfr_get_d(hi_.get(), MPFR_RNDN));
  }

 private:
  MpfrFloat lo_, hi_;
  mpfr_prec_t prec_;
};

namespace detail {

// Enclosure of 2*pi*x for rational x >= 0.
inline Interval two_pi_times(const Rational& x, mpfr_prec_t prec) {
  Interval r(prec);
  MpfrFloat pi_lo(prec), pi_hi(prec), xf(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_set_q(xf.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_mul(r.lo(), pi_lo.get(), xf.get(), MPFR_RNDD);
  mpfr_mul_ui(r.lo(), r.lo(), 2, MPFR_RNDD);
  mpfr_set_q(xf.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(r.hi(), pi_hi.get(), xf.get(), MPFR_RNDU);
  mpfr_mul_ui(r.hi(), r.hi(), 2, MPFR_RNDU);
  return r;
}

// Enclosure of f over [theta.lo, theta.hi] via evaluation at the left
// endpoint and the Lipschitz bound |f(a)-f(b)| <= |a-b| (f = sin or cos),
// clamped to [-1, 1].
template <typename Fn>
Interval lipschitz_trig(const Interval& theta, mpfr_prec_t prec, Fn f) {
  Interval r(prec);
  MpfrFloat width(prec), one(prec);
  f(r.lo(), theta.lo(), MPFR_RNDD);
  f(r.hi(), theta.lo(), MPFR_RNDU);
  mpfr_sub(width.get(), theta.hi(), theta.lo(), MPFR_RNDU);
  mpfr_sub(r.lo(), r.lo(), width.get(), MPFR_RNDD);
  mpfr_add(r.hi(), r.hi(), width.get(), MPFR_RNDU);
  mpfr_set_si(one.get(), -1, MPFR_RNDN);
  mpfr_max(r.lo(), r.lo(), one.get(), MPFR_RNDD);
  mpfr_set_si(one.get(), 1, MPFR_RNDN);
  mpfr_min(r.hi(), r.hi(), one.get(), MPFR_RNDU);
  return r;
}

}  // namespace detail

// Certified enclosures of cos(2 pi x) and sin(2 pi x) for exact rational x.
inline Interval cos_two_pi(const Rational& x, mpfr_prec_t prec) {
  return detail::lipschitz_trig(detail::two_pi_times(x, prec), prec, mpfr_cos);
}

inline Interval sin_two_pi(const Rational& x, mpfr_prec_t prec) {
  return detail::lipschitz_trig(detail::two_pi_times(x, prec), prec, mpfr_sin);
}

}  // namespace knotsig

#endif  // KNOTSIG_INTERVAL_HPP
