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

#ifndef KNOTSIG_SIG_ENGINE_HPP
#define KNOTSIG_SIG_ENGINE_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotsig/inertia.hpp"
#include "knotsig/interval.hpp"
#include "knotsig/knot_core.hpp"

namespace knotsig {

// The form is singular at this circle point; use the averaged variant.
struct DegeneratePoint : std::domain_error {
  explicit DegeneratePoint(const UnitCirclePoint& x)
      : std::domain_error("signature undefined at root of the Alexander polynomial, x = " +
                          fraction_string(x.value())) {}
};

// Certification failed at the precision ceiling: either a bug or an
// unlisted breakpoint.
struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const UnitCirclePoint& x, long max_bits)
      : std::runtime_error("inertia not certifiable at x = " + fraction_string(x.value()) +
                           " within " + std::to_string(max_bits) + " bits") {}
};

struct InconsistentProfile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrecisionOptions {
  long start_bits = 64;
  long max_bits = 4096;
};

// The hermitian form P = (1-w)V + (1-wbar)V^T at w = e^{2 pi i x}, kept
// symbolically as its source pair and materialized on demand.
class HermitianForm {
 public:
  HermitianForm(SeifertMatrix v, UnitCirclePoint x) : v_(std::move(v)), x_(std::move(x)) {}

  std::size_t size() const { return v_.size(); }
  const SeifertMatrix& seifert() const { return v_; }
  const UnitCirclePoint& point() const { return x_; }

  // Row-major dense matrix at double working precision.
  std::vector<std::complex<double>> to_complex() const {
    const std::size_t n = v_.size();
    const double theta = 2.0 * 3.14159265358979323846 * x_.value().get_d();
    const std::complex<double> w(std::cos(theta), std::sin(theta));
    const std::complex<double> cw = std::conj(w);
    std::vector<std::complex<double>> p(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p[i * n + j] = (1.0 - w) * v_.entry(i, j).get_d() +
                       (1.0 - cw) * v_.entry(j, i).get_d();
    return p;
  }

 private:
  SeifertMatrix v_;
  UnitCirclePoint x_;
};

inline HermitianForm assemble_form(SeifertMatrix v, UnitCirclePoint x) {
  return HermitianForm(std::move(v), std::move(x));
}

// The Levine-Tristram signature as a step function: sorted jump locations
// x_k with integer jump values j_K(x_k), and sigma = 0 at x = 0.
struct SignatureProfile {
  std::vector<UnitCirclePoint> breakpoints;
  std::vector<long> jumps;

  std::size_t size() const { return breakpoints.size(); }

  long total_jump() const {
    long s = 0;
    for (long j : jumps) s += j;
    return s;
  }

  // Signature value on each sector (x_k, x_{k+1}) starting with (0, x_1);
  // one value per breakpoint. The closing sector (x_n, 1) returns to 0 and
  // is not listed.
  std::vector<long> sector_signatures() const {
    std::vector<long> sectors;
    sectors.reserve(breakpoints.size());
    long cum = 0;
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
      sectors.push_back(2 * cum);
      cum += jumps[k];
    }
    return sectors;
  }

  SignatureProfile negated() const {
    SignatureProfile p = *this;
    for (long& j : p.jumps) j = -j;
    return p;
  }
};

// Pointwise sum of two step functions; the profile of a connected sum.
inline SignatureProfile merge_profiles(const SignatureProfile& a, const SignatureProfile& b) {
  SignatureProfile out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a.breakpoints[i] < b.breakpoints[j])) {
      out.breakpoints.push_back(a.breakpoints[i]);
      out.jumps.push_back(a.jumps[i]);
      ++i;
    } else if (i == a.size() || b.breakpoints[j] < a.breakpoints[i]) {
      out.breakpoints.push_back(b.breakpoints[j]);
      out.jumps.push_back(b.jumps[j]);
      ++j;
    } else {
      out.breakpoints.push_back(a.breakpoints[i]);
      out.jumps.push_back(a.jumps[i] + b.jumps[j]);
      ++i;
      ++j;
    }
  }
  return out;
}

// Evaluates omega-signatures of a fixed Seifert matrix at exact rational
// circle points, with certified integer results at every precision.
//
// Strategy: realify P = A + iB into the symmetric [[A,-B],[B,A]] (which has
// the eigenvalues of P doubled), enclose it in intervals, and run certified
// symmetric elimination, doubling the working precision until every pivot
// sign is proved. A full-rank certificate at any precision also proves x is
// not a root, so the exact root test (cyclotomic divisibility of the
// Alexander polynomial) only runs after a failed certification.
class SignatureEngine {
 public:
  explicit SignatureEngine(SeifertMatrix v, PrecisionOptions opts = {})
      : v_(std::move(v)),
        sym_(v_.symmetrized()),
        skew_(v_.skew_part()),
        opts_(opts) {
    if (opts_.start_bits < 16 || opts_.max_bits < opts_.start_bits)
      throw std::invalid_argument("bad precision options");
  }

  const SeifertMatrix& seifert() const { return v_; }
  const PrecisionOptions& options() const { return opts_; }

  // Supplies the exact list of circle roots of the Alexander polynomial,
  // when the knot family provides one; root tests then use the list.
  void set_known_roots(std::vector<UnitCirclePoint> roots) {
    std::sort(roots.begin(), roots.end());
    known_roots_ = std::move(roots);
  }

  bool is_root(const UnitCirclePoint& x) const {
    if (known_roots_)
      return std::binary_search(known_roots_->begin(), known_roots_->end(), x);
    return is_root_exact(x);
  }

  // Integer signature of P(x); requires x not a root of the Alexander
  // polynomial. Throws DegeneratePoint at roots, PrecisionExhausted if the
  // certificate fails at the precision ceiling.
  int signature_at(const UnitCirclePoint& x) const {
    return signature_impl(x, known_roots_ ? &*known_roots_ : nullptr);
  }

  // (sigma(x - gap/2) + sigma(x + gap/2)) / 2, the paper's value at roots;
  // requires no other breakpoint within (x - gap, x + gap).
  Rational signature_at_root_averaged(const UnitCirclePoint& x, const Rational& gap) const {
    if (sgn(gap) <= 0) throw std::invalid_argument("averaging gap must be positive");
    const Rational delta = gap / 2;
    const UnitCirclePoint left = UnitCirclePoint::wrapped(x.value() - delta);
    const UnitCirclePoint right = UnitCirclePoint::wrapped(x.value() + delta);
    return make_rational(Int(signature_at(left)) + Int(signature_at(right)), Int(2));
  }

  // Full step profile from the exact breakpoint list: samples the signature
  // at the rational midpoint of every sector (including (0, x_1) and
  // (x_n, 1)) and recovers the jumps by differencing.
  SignatureProfile profile(const std::vector<UnitCirclePoint>& breakpoints) const {
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
      if (breakpoints[k].is_zero())
        throw std::invalid_argument("x = 0 is never a jump point");
      if (k > 0 && !(breakpoints[k - 1] < breakpoints[k]))
        throw std::invalid_argument("breakpoints must be strictly increasing");
    }
    SignatureProfile result;
    if (breakpoints.empty()) return result;

    std::vector<long> sigma;
    sigma.reserve(breakpoints.size() + 1);
    for (std::size_t k = 0; k <= breakpoints.size(); ++k) {
      const Rational left = (k == 0) ? Rational(0) : breakpoints[k - 1].value();
      const Rational right = (k == breakpoints.size()) ? Rational(1) : breakpoints[k].value();
      const UnitCirclePoint mid((left + right) / 2);
      sigma.push_back(signature_impl(mid, &breakpoints));
    }

    if (sigma.front() != 0)
      throw InconsistentProfile("signature is nonzero just after x = 0");
    if (sigma.back() != 0)
      throw InconsistentProfile("jumps do not sum to zero");
    result.breakpoints = breakpoints;
    result.jumps.reserve(breakpoints.size());
    for (std::size_t k = 0; k + 1 <= breakpoints.size(); ++k) {
      const long diff = sigma[k + 1] - sigma[k];
      if (diff % 2 != 0)
        throw InconsistentProfile("odd signature difference across a breakpoint");
      result.jumps.push_back(diff / 2);
    }
    return result;
  }

 private:
  // Exact root test: x = n/m in lowest terms makes omega a primitive m-th
  // root of unity, so Delta(omega) = 0 iff the m-th cyclotomic polynomial
  // divides Delta over Z. phi(m) >= sqrt(m/2) lets huge denominators fail
  // the degree bound without building the cyclotomic.
  bool is_root_exact(const UnitCirclePoint& x) const {
    if (x.is_zero()) return false;  // Delta(1) = det(V - V^T) = +-1
    const long degree_bound = static_cast<long>(v_.size());
    const Int m = x.denominator();
    if (m > Int(2) * degree_bound * degree_bound + 2) return false;
    const IntPoly delta = alexander_polynomial(v_);
    const IntPoly phi = cyclotomic(m.get_ui());
    if (phi.degree() > delta.degree()) return false;
    return divides(phi, delta);
  }

  int signature_impl(const UnitCirclePoint& x, const std::vector<UnitCirclePoint>* roots) const {
    const std::size_t dim = v_.size();
    if (dim == 0 || x.is_zero()) return 0;
    if (roots && std::binary_search(roots->begin(), roots->end(), x))
      throw DegeneratePoint(x);

    bool root_checked = roots != nullptr;
    long prec = opts_.start_bits;
    while (true) {
      const auto inertia = certified_inertia(realified(x, prec));
      if (inertia) {
        const long sig2 = static_cast<long>(inertia->positive) -
                          static_cast<long>(inertia->negative);
        if (sig2 % 2 != 0)
          throw std::logic_error("realified signature must be even");
        return static_cast<int>(sig2 / 2);
      }
      if (!root_checked) {
        if (is_root_exact(x)) throw DegeneratePoint(x);
        root_checked = true;
      }
      if (prec >= opts_.max_bits) throw PrecisionExhausted(x, opts_.max_bits);
      prec = std::min(prec * 2, opts_.max_bits);
    }
  }

  // [[A,-B],[B,A]] for P = A + iB, where A = (1-cos 2 pi x)(V + V^T) and
  // B = (sin 2 pi x)(V^T - V); symmetric with the eigenvalues of P doubled.
  SymmetricIntervalMatrix realified(const UnitCirclePoint& x, long prec) const {
    const std::size_t dim = v_.size();
    const auto bits = static_cast<mpfr_prec_t>(prec);
    const Interval c = cos_two_pi(x.value(), bits);
    const Interval s = sin_two_pi(x.value(), bits);
    const Interval u = Interval::from_long(1, bits) - c;
    SymmetricIntervalMatrix m(2 * dim, bits);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Interval a = u.scaled(sym_(i, j));
        m.at(dim + i, dim + j) = a;
        m.at(i, j) = std::move(a);
        m.at(i, dim + j) = s.scaled(skew_(j, i));
        m.at(dim + i, j) = s.scaled(skew_(i, j));
      }
    return m;
  }

  SeifertMatrix v_;
  IntMatrix sym_;
  IntMatrix skew_;
  std::optional<std::vector<UnitCirclePoint>> known_roots_;
  PrecisionOptions opts_;
};

inline int signature_at(const SeifertMatrix& v, const UnitCirclePoint& x,
                        PrecisionOptions opts = {}) {
  return SignatureEngine(v, opts).signature_at(x);
}

inline Rational signature_at_root_averaged(const SeifertMatrix& v, const UnitCirclePoint& x,
                                           const Rational& gap, PrecisionOptions opts = {}) {
  return SignatureEngine(v, opts).signature_at_root_averaged(x, gap);
}

inline SignatureProfile signature_profile(const SeifertMatrix& v,
                                          const std::vector<UnitCirclePoint>& breakpoints,
                                          PrecisionOptions opts = {}) {
  return SignatureEngine(v, opts).profile(breakpoints);
}

}  // namespace knotsig

#endif  // KNOTSIG_SIG_ENGINE_HPP
