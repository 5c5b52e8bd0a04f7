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

// Test-only oracles, kept independent of the library's computation paths:
// exact rational congruence elimination for inertia, a cyclic-Jacobi
// eigenvalue count for hermitian forms, and the introduction's direct
// b-sign jump rule.

#ifndef KNOTSIG_TESTS_ORACLES_HPP
#define KNOTSIG_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "knotsig/numeric.hpp"

namespace knotsig::testing {

struct ExactInertia {
  long positive = 0;
  long negative = 0;
  long zero = 0;
};

// Inertia of a symmetric rational matrix by exact congruence elimination.
// When the remaining diagonal is all zero but an off-diagonal entry m(i,j)
// survives, the congruence "row/col i += row/col j" makes m(i,i) = 2 m(i,j)
// nonzero without changing the inertia.
inline ExactInertia exact_symmetric_inertia(std::vector<Rational> m, std::size_t n) {
  if (m.size() != n * n) throw std::invalid_argument("bad matrix size");
  auto at = [&m, n](std::size_t i, std::size_t j) -> Rational& { return m[i * n + j]; };
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  ExactInertia inertia;
  while (!active.empty()) {
    std::size_t pivot_pos = active.size();
    for (std::size_t a = 0; a < active.size(); ++a)
      if (sgn(at(active[a], active[a])) != 0) {
        pivot_pos = a;
        break;
      }
    if (pivot_pos == active.size()) {
      std::size_t ri = active.size(), rj = active.size();
      for (std::size_t a = 0; a < active.size() && ri == active.size(); ++a)
        for (std::size_t b = a + 1; b < active.size(); ++b)
          if (sgn(at(active[a], active[b])) != 0) {
            ri = a;
            rj = b;
            break;
          }
      if (ri == active.size()) {
        inertia.zero += static_cast<long>(active.size());
        break;
      }
      const std::size_t i = active[ri], j = active[rj];
      for (std::size_t c = 0; c < n; ++c) at(i, c) += at(j, c);
      for (std::size_t r = 0; r < n; ++r) at(r, i) += at(r, j);
      pivot_pos = ri;
    }
    const std::size_t k = active[pivot_pos];
    const Rational pivot = at(k, k);
    (sgn(pivot) > 0 ? inertia.positive : inertia.negative) += 1;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (std::size_t a = 0; a < active.size(); ++a) {
      const std::size_t i = active[a];
      const Rational factor = at(i, k) / pivot;
      if (sgn(factor) == 0) continue;
      for (std::size_t b = 0; b < active.size(); ++b) {
        const std::size_t j = active[b];
        at(i, j) -= factor * at(k, j);
      }
    }
    // Zero out the pivot row couplings symmetrically (not read again, but
    // keeps the invariant that m stays symmetric for the off-diagonal scan).
    for (std::size_t a = 0; a < active.size(); ++a) {
      at(active[a], k) = 0;
      at(k, active[a]) = 0;
    }
  }
  return inertia;
}

// Signature of a complex hermitian matrix through cyclic Jacobi on the
// realified symmetric matrix [[Re, -Im], [Im, Re]] in double precision.
// Good to ~1e-8 on the small well-conditioned matrices tests use.
inline int jacobi_signature(const std::vector<std::complex<double>>& p, std::size_t n,
                            double tol = 1e-9) {
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i * m + j] = p[i * n + j].real();
      a[(n + i) * m + (n + j)] = p[i * n + j].real();
      a[i * m + (n + j)] = -p[i * n + j].imag();
      a[(n + i) * m + j] = p[i * n + j].imag();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) off += a[i * m + j] * a[i * m + j];
    if (off < 1e-24) break;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const double apq = a[i * m + j];
        if (std::abs(apq) < 1e-18) continue;
        const double app = a[i * m + i], aqq = a[j * m + j];
        const double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = 0; k < m; ++k) {
          const double aki = a[k * m + i], akj = a[k * m + j];
          a[k * m + i] = c * aki - s * akj;
          a[k * m + j] = s * aki + c * akj;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double aik = a[i * m + k], ajk = a[j * m + k];
          a[i * m + k] = c * aik - s * ajk;
          a[j * m + k] = s * aik + c * ajk;
        }
      }
  }
  int sig2 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i * m + i] > tol) ++sig2;
    else if (a[i * m + i] < -tol) --sig2;
  }
  if (sig2 % 2 != 0) throw std::runtime_error("jacobi oracle produced odd doubled signature");
  return sig2 / 2;
}

// The introduction's rule: write n = a p + b q with 0 < a < q and report
// the sign of b; zero at multiples of p or q.
inline long b_sign_jump(long p, long q, long n) {
  if (n % p == 0 || n % q == 0) return 0;
  for (long a = 1; a < q; ++a) {
    if ((n - a * p) % q == 0) return (n - a * p) / q > 0 ? 1 : -1;
  }
  throw std::logic_error("no decomposition found");
}

}  // namespace knotsig::testing

#endif  // KNOTSIG_TESTS_ORACLES_HPP
