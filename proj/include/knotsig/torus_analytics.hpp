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

#ifndef KNOTSIG_TORUS_ANALYTICS_HPP
#define KNOTSIG_TORUS_ANALYTICS_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotsig/knot_core.hpp"
#include "knotsig/numeric.hpp"

namespace knotsig {

// |L(n)| = #{(i,j) : iq + jp = n, 0 <= i <= p, 0 <= j <= q}, enumerated
// over the i coordinate. Defined for 0 < n < 2pq.
inline long lattice_count(const TorusKnotParams& params, long n) {
  if (n <= 0 || n >= 2 * params.pq())
    throw std::domain_error("lattice_count requires 0 < n < 2pq");
  long count = 0;
  for (long i = 0; i <= params.p; ++i) {
    const long rest = n - i * params.q;
    if (rest < 0) break;
    if (rest % params.p == 0 && rest / params.p <= params.q) ++count;
  }
  return count;
}

// Jump of the signature of T_{p,q} at x = n/pq, 0 < n < pq. Computed both
// as the case split (+1 when |L(n)| = 1, -1 when |L(n)| = 0, 0 at multiples
// of p or q) and as |L(n)| - |L(pq+n)|; the two must agree.
inline long jump_torus(const TorusKnotParams& params, long n) {
  if (n <= 0 || n >= params.pq())
    throw std::domain_error("jump_torus requires 0 < n < pq");
  const long litherland = lattice_count(params, n) - lattice_count(params, params.pq() + n);
  long cases;
  if (n % params.p == 0 || n % params.q == 0) {
    cases = 0;
  } else {
    cases = lattice_count(params, n) == 1 ? 1 : -1;
  }
  if (cases != litherland)
    throw std::logic_error("jump routes disagree; lattice enumeration is broken");
  return cases;
}

// The decomposition n = a p + b q with 0 < a < q, for n not a multiple of
// p or q; the sign of b is the jump of the torus-knot signature at n/pq.
struct IntroDecomposition {
  long n;
  long a;
  long b;
  int sign;  // +1 iff b > 0
};

inline IntroDecomposition intro_decompose(const TorusKnotParams& params, long n) {
  if (n <= 0 || n >= params.pq())
    throw std::domain_error("intro_decompose requires 0 < n < pq");
  if (n % params.p == 0 || n % params.q == 0)
    throw std::domain_error("intro_decompose requires n coprime to pq");
  // a = n * p^{-1} mod q lands in (0, q) because q does not divide n.
  long a = 0;
  for (long cand = 1; cand < params.q; ++cand) {
    if ((Int(cand) * params.p - n) % params.q == 0) {
      a = cand;
      break;
    }
  }
  if (a == 0) throw std::logic_error("no residue solves n = a p (mod q)");
  const long b = (n - a * params.p) / params.q;
  if (b == 0) throw std::logic_error("b = 0 impossible for n coprime to pq");
  return {n, a, b, b > 0 ? 1 : -1};
}

// s(n) = sum_{i=1}^{n} j(i) for n = 1 .. pq-1, with j extended by 0 at
// multiples of p and q so the series is total.
inline std::vector<long> partial_sum_series(const TorusKnotParams& params) {
  std::vector<long> series;
  const long pq = params.pq();
  if (pq <= 1) return series;
  series.reserve(static_cast<std::size_t>(pq - 1));
  long acc = 0;
  for (long n = 1; n < pq; ++n) {
    acc += jump_torus(params, n);
    series.push_back(acc);
  }
  return series;
}

// The 2s(n) series plotted in the introduction's figures.
inline std::vector<long> partial_sum_series_doubled(const TorusKnotParams& params) {
  std::vector<long> series = partial_sum_series(params);
  for (long& v : series) v *= 2;
  return series;
}

// S = { n in [1, pq-1] : n = qx + py, 0 < x < p, 0 < y < q }, sorted.
// Distinct (x,y) give distinct n, and |S| = (p-1)(q-1)/2.
inline std::vector<long> set_S_members(const TorusKnotParams& params) {
  std::vector<long> members;
  const long pq = params.pq();
  for (long x = 1; x < params.p; ++x)
    for (long y = 1; y < params.q; ++y) {
      const long n = params.q * x + params.p * y;
      if (n <= pq - 1) members.push_back(n);
    }
  std::sort(members.begin(), members.end());
  return members;
}

// Mordell's closed form for sum_{n in S} n:
//   pq(p-1)(q-1)/3 + (p-1)(q-1)(p+q+1)/12.
inline Rational mordell_sum(const TorusKnotParams& params) {
  const Int p(params.p), q(params.q);
  const Rational first = make_rational(p * q * (p - 1) * (q - 1), Int(3));
  const Rational second = make_rational((p - 1) * (q - 1) * (p + q + 1), Int(12));
  return first + second;
}

// Exactly one of n and pq-n is iq + jp with i,j > 0, for n in [1, pq-1]
// not a multiple of p or q. Returns (n representable, pq-n representable).
inline std::pair<bool, bool> oneof_check(const TorusKnotParams& params, long n) {
  if (n < 1 || n > params.pq() - 1)
    throw std::domain_error("oneof_check requires 1 <= n <= pq-1");
  if (n % params.p == 0 || n % params.q == 0)
    throw std::domain_error("oneof_check requires n coprime to pq");
  auto representable = [&params](long m) {
    for (long i = 1; i * params.q < m; ++i)
      if ((m - i * params.q) % params.p == 0) return true;
    return false;
  };
  const bool first = representable(n);
  const bool second = representable(params.pq() - n);
  if (first == second)
    throw std::logic_error("exactly-one representability violated");
  return {first, second};
}

// The paper's main closed form: integral of the omega-signatures of T_{p,q}
// equals -(p-1)(p+1)(q-1)(q+1) / (3pq).
inline Rational l2_closed_form(const TorusKnotParams& params) {
  const Int p(params.p), q(params.q);
  return make_rational(-(p - 1) * (p + 1) * (q - 1) * (q + 1), Int(3) * p * q);
}

// The same integral computed as written in the proof:
//   (2/pq) sum_{n=1}^{pq-1} (pq - n) j_{p,q}(n/pq).
inline Rational l2_weighted_jump_form(const TorusKnotParams& params) {
  const long pq = params.pq();
  Int acc(0);
  for (long n = 1; n < pq; ++n) acc += Int(pq - n) * jump_torus(params, n);
  return make_rational(Int(2) * acc, Int(pq));
}

// N_{p,q} = #{(x,y) : 1 <= x <= (p-1)/2, 1 <= y <= (q-1)/2,
//                     -p/2 < qx - py < 0}, for odd coprime p, q.
inline long lattice_count_N(const TorusKnotParams& params) {
  if (params.p % 2 == 0 || params.q % 2 == 0)
    throw std::domain_error("lattice_count_N requires odd p and q");
  long count = 0;
  for (long x = 1; x <= (params.p - 1) / 2; ++x)
    for (long y = 1; y <= (params.q - 1) / 2; ++y) {
      const long v = 2 * (params.q * x - params.p * y);  // compare against -p/2 exactly
      if (-params.p < v && v < 0) ++count;
    }
  return count;
}

// Hirzebruch's formula for the ordinary signature at omega = -1:
//   sigma_{-1}(T_{p,q}) = -((p-1)(q-1)/2 + 2(N_{p,q} + N_{q,p})).
inline long hirzebruch_sigma_minus1(const TorusKnotParams& params) {
  if (params.p % 2 == 0 || params.q % 2 == 0)
    throw std::domain_error("hirzebruch_sigma_minus1 requires odd p and q");
  const long swapped_count = lattice_count_N(TorusKnotParams(params.q, params.p));
  return -((params.p - 1) * (params.q - 1) / 2 +
           2 * (lattice_count_N(params) + swapped_count));
}

}  // namespace knotsig

#endif  // KNOTSIG_TORUS_ANALYTICS_HPP
