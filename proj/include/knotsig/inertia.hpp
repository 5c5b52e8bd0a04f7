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

#ifndef KNOTSIG_INERTIA_HPP
#define KNOTSIG_INERTIA_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "knotsig/interval.hpp"

namespace knotsig {

struct InertiaCount {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

class SymmetricIntervalMatrix {
 public:
  SymmetricIntervalMatrix(std::size_t n, mpfr_prec_t prec)
      : n_(n), m_(n * n, Interval(prec)) {}

  std::size_t size() const { return n_; }
  Interval& at(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }
  const Interval& at(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }

  void set_symmetric(std::size_t i, std::size_t j, Interval v) {
    if (i != j) m_[j * n_ + i] = v;
    m_[i * n_ + j] = std::move(v);
  }

 private:
  std::size_t n_;
  std::vector<Interval> m_;
};

namespace detail {
inline bool exactly_zero(const Interval& v) {
  return mpfr_zero_p(v.lo()) && mpfr_zero_p(v.hi());
}
}  // namespace detail

// Inertia of a full-rank symmetric matrix held as an interval enclosure,
// by symmetric elimination with certified pivots. A 1x1 pivot is accepted
// only when its interval excludes zero; when no diagonal entry certifies,
// a 2x2 block pivot [[a,b],[b,c]] with certified negative determinant
// contributes one eigenvalue of each sign and is eliminated by its Schur
// complement. Returns nullopt when no pivot can be certified at the
// working precision -- the caller escalates and retries.
//
// Interval arithmetic only over-encloses, so a returned count is exact:
// it is the inertia of every symmetric matrix inside the enclosure.
inline std::optional<InertiaCount> certified_inertia(SymmetricIntervalMatrix m) {
  std::vector<std::size_t> active(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) active[i] = i;

  InertiaCount count;
  while (!active.empty()) {
    std::size_t best = active.size();
    double best_mig = 0.0;
    for (std::size_t a = 0; a < active.size(); ++a) {
      const double mig = m.at(active[a], active[a]).mignitude();
      if (mig > best_mig) {
        best_mig = mig;
        best = a;
      }
    }

    if (best != active.size()) {
      const std::size_t k = active[best];
      const Interval pivot = m.at(k, k);
      (pivot.sign() > 0 ? count.positive : count.negative) += 1;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
      for (std::size_t a = 0; a < active.size(); ++a) {
        const std::size_t i = active[a];
        if (detail::exactly_zero(m.at(i, k))) continue;
        const Interval row_factor = m.at(i, k) / pivot;
        for (std::size_t b = a; b < active.size(); ++b) {
          const std::size_t j = active[b];
          if (detail::exactly_zero(m.at(k, j))) continue;
          m.set_symmetric(i, j, m.at(i, j) - row_factor * m.at(k, j));
        }
      }
      continue;
    }

    // No certifiable diagonal entry. Try 2x2 pivots in decreasing order of
    // off-diagonal mignitude (ties broken by index, keeping the elimination
    // deterministic).
    struct Candidate {
      double mig;
      std::size_t a, b;
    };
    std::vector<Candidate> candidates;
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        const double mig = m.at(active[a], active[b]).mignitude();
        if (mig > 0.0) candidates.push_back({mig, a, b});
      }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
      if (x.mig != y.mig) return x.mig > y.mig;
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });

    bool eliminated = false;
    for (const Candidate& cand : candidates) {
      const std::size_t i = active[cand.a], j = active[cand.b];
      const Interval a = m.at(i, i);
      const Interval b = m.at(i, j);
      const Interval c = m.at(j, j);
      const Interval det = a * c - b * b;
      if (det.sign() >= 0) continue;
      count.positive += 1;
      count.negative += 1;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(cand.b));
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(cand.a));
      // Schur complement against E = [[a,b],[b,c]]: with couplings
      // u_k = M(k,i), v_k = M(k,j),
      //   M(k,l) -= (u_k*(c*u_l - b*v_l) + v_k*(a*v_l - b*u_l)) / det.
      for (std::size_t x = 0; x < active.size(); ++x) {
        const std::size_t k = active[x];
        const Interval uk = m.at(k, i), vk = m.at(k, j);
        if (detail::exactly_zero(uk) && detail::exactly_zero(vk)) continue;
        for (std::size_t y = x; y < active.size(); ++y) {
          const std::size_t l = active[y];
          const Interval ul = m.at(l, i), vl = m.at(l, j);
          const Interval num = uk * (c * ul - b * vl) + vk * (a * vl - b * ul);
          m.set_symmetric(k, l, m.at(k, l) - num / det);
        }
      }
      eliminated = true;
      break;
    }
    if (!eliminated) return std::nullopt;
  }
  return count;
}

}  // namespace knotsig

#endif  // KNOTSIG_INERTIA_HPP
