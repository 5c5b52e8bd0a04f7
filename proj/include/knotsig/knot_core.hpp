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

#ifndef KNOTSIG_KNOT_CORE_HPP
#define KNOTSIG_KNOT_CORE_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotsig/matrix.hpp"
#include "knotsig/numeric.hpp"
#include "knotsig/polynomial.hpp"

namespace knotsig {

// Parameters of the (p,q) torus knot. p = 1 or q = 1 is the unknot and is
// accepted everywhere; non-coprime pairs describe links and are rejected.
struct TorusKnotParams {
  long p;
  long q;

  TorusKnotParams(long p_, long q_) : p(p_), q(q_) {
    if (p < 1 || q < 1) throw std::domain_error("torus knot parameters must be positive");
    if (std::gcd(p, q) != 1) throw std::domain_error("torus knot parameters must be coprime");
    if (p > (1L << 30) || q > (1L << 30))
      throw std::domain_error("torus knot parameters out of supported range");
  }

  long pq() const { return p * q; }
};

// Seifert matrix: square integer matrix of even size 2g whose intersection
// form V - V^T is unimodular. The 0x0 matrix represents the unknot.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
    if (v_.rows() != v_.cols()) throw std::domain_error("Seifert matrix must be square");
    if (v_.rows() % 2 != 0) throw std::domain_error("Seifert matrix must have even size");
    const Int d = determinant(v_ - v_.transpose());
    if (d != 1 && d != -1)
      throw std::domain_error("Seifert matrix must have unimodular V - V^T");
  }

  std::size_t size() const { return v_.rows(); }
  std::size_t genus() const { return v_.rows() / 2; }
  const IntMatrix& matrix() const { return v_; }
  const Int& entry(std::size_t i, std::size_t j) const { return v_(i, j); }

  IntMatrix symmetrized() const { return v_ + v_.transpose(); }    // V + V^T
  IntMatrix skew_part() const { return v_.transpose() - v_; }      // V^T - V

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.v_ == b.v_;
  }

 private:
  IntMatrix v_;
};

// Seifert matrix of the twist knot K_n: [[-1, 1], [0, n]].
inline SeifertMatrix twist_seifert_matrix(long n) {
  IntMatrix v(2, 2);
  v(0, 0) = -1;
  v(0, 1) = 1;
  v(1, 0) = 0;
  v(1, 1) = n;
  return SeifertMatrix(std::move(v));
}

// Seifert matrix of T_{p,q} from Seifert's algorithm on the closure of the
// positive braid (s_1 s_2 ... s_{p-1})^q. The fiber surface is p discs
// joined by one band per braid letter; H_1 is generated by the loops
// c_{i,j} running through consecutive bands of the strand pair i. In word
// positions, loop (i,j) spans [i + (j-1)(p-1), i + j(p-1)], so on the next
// strand pair the loop (i+1, j) starts inside that span and (i+1, j-1) ends
// inside it; those are the only interacting pairs. Linking numbers:
//   lk(c+, c)           = -1
//   lk(c_{i,j}+, c_{i,j+1}) = +1   (shared band, same strand pair)
//   lk(c_{i,j}+, c_{i+1,j}) = +1   (starts inside)
//   lk(c_{i,j}+, c_{i+1,j-1}) = -1 (ends inside)
// with all transposed pairs linking 0. Basis order is lexicographic (i,j).
// The convention is pinned by the cross-route tests: det(V - tV^T) must be
// the torus Alexander polynomial and the inertia route must reproduce the
// combinatorial jumps and the Hirzebruch sigma_{-1} values.
inline SeifertMatrix torus_seifert_matrix(const TorusKnotParams& params) {
  const long p = params.p, q = params.q;
  const std::size_t cols = static_cast<std::size_t>(q - 1);
  const std::size_t n = static_cast<std::size_t>((p - 1) * (q - 1));
  IntMatrix v(n, n);
  auto idx = [cols](long i, long j) {
    return static_cast<std::size_t>(i - 1) * cols + static_cast<std::size_t>(j - 1);
  };
  for (long i = 1; i < p; ++i)
    for (long j = 1; j < q; ++j) {
      const std::size_t u = idx(i, j);
      v(u, u) = -1;
      if (j + 1 < q) v(u, idx(i, j + 1)) = 1;
      if (i + 1 < p) {
        v(u, idx(i + 1, j)) = 1;
        if (j > 1) v(u, idx(i + 1, j - 1)) = -1;
      }
    }
  return SeifertMatrix(std::move(v));
}

// Alexander polynomial Delta(t) = det(V - tV^T), stored exactly as the
// determinant (comparisons elsewhere are up to +-t^k).
inline IntPoly alexander_polynomial(const SeifertMatrix& v) {
  return matrix_pencil_determinant(v.matrix(), Int(-1) * v.matrix().transpose());
}

// Delta_{p,q}(t) = (1-t^{pq})(1-t) / ((1-t^p)(1-t^q)), by exact division.
inline IntPoly torus_alexander_closed(const TorusKnotParams& params) {
  if (params.p == 1 || params.q == 1) return IntPoly::constant(Int(1));
  const auto pq = static_cast<std::size_t>(params.pq());
  IntPoly num = IntPoly::one_minus_power(pq) * IntPoly::one_minus_power(1);
  IntPoly result = divexact(num, IntPoly::one_minus_power(static_cast<std::size_t>(params.p)));
  result = divexact(result, IntPoly::one_minus_power(static_cast<std::size_t>(params.q)));
  return result;
}

// The pq-th roots of unity that are neither p-th nor q-th roots: x = n/pq
// for 0 < n < pq with p and q both not dividing n. These are the only
// places the signature of T_{p,q} can jump; there are (p-1)(q-1) of them.
inline std::vector<UnitCirclePoint> circle_breakpoints(const TorusKnotParams& params) {
  std::vector<UnitCirclePoint> points;
  const long pq = params.pq();
  points.reserve(static_cast<std::size_t>((params.p - 1) * (params.q - 1)));
  for (long n = 1; n < pq; ++n)
    if (n % params.p != 0 && n % params.q != 0)
      points.emplace_back(make_rational(n, pq));
  return points;
}

}  // namespace knotsig

#endif  // KNOTSIG_KNOT_CORE_HPP
