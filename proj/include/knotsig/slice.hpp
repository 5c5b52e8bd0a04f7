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

#ifndef KNOTSIG_SLICE_HPP
#define KNOTSIG_SLICE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotsig/l2.hpp"
#include "knotsig/sig_engine.hpp"
#include "knotsig/torus_analytics.hpp"

namespace knotsig {

// Slice-obstruction outcomes for twist knots K_n. "NoObstruction" means
// none of the implemented obstructions fires; it never asserts sliceness
// (though K_0 is the unknot and K_2 is in fact slice).
enum class SliceObstruction {
  ObstructedSignature,   // some omega-signature is nonzero
  ObstructedFoxMilnor,   // 4n+1 is not a perfect square
  ObstructedLTwo,        // algebraically slice, but the derived torus knot
                         // T(m, m+1) has nonzero L2 signature
  NoObstruction,
};

inline const char* obstruction_name(SliceObstruction v) {
  switch (v) {
    case SliceObstruction::ObstructedSignature: return "obstructed-signature";
    case SliceObstruction::ObstructedFoxMilnor: return "obstructed-fox-milnor";
    case SliceObstruction::ObstructedLTwo: return "obstructed-l2";
    case SliceObstruction::NoObstruction: return "no-obstruction";
  }
  return "?";
}

struct SliceVerdict {
  SliceObstruction verdict = SliceObstruction::NoObstruction;

  // ObstructedSignature: the circle point and its nonzero signature.
  std::optional<std::pair<UnitCirclePoint, long>> signature_witness;
  // ObstructedFoxMilnor: the non-square discriminant 4n+1.
  std::optional<Int> fox_milnor_witness;
  // ObstructedLTwo: m >= 2 with n = m(m+1) and the nonzero L2 signature
  // of T(m, m+1).
  std::optional<std::pair<long, Rational>> l2_witness;

  std::string reason;
};

// Obstruction analysis of the twist knot K_n (the n-twisted double of the
// unknot), following the three-way case split:
//   n < 0: the Alexander polynomial has distinct unit roots and the
//          signature is nonzero; witnessed at omega = -1.
//   n > 0, 4n+1 not a square: Fox-Milnor (slice polynomials factor as
//          f(t) f(1/t)) rules sliceness out.
//   n = m(m+1) > 0: algebraically slice; the zero-linking curve on the
//          genus-1 surface is T(m, m+1), whose L2 signature must vanish
//          for sliceness, and it is -(m-1)(m+2)/3 != 0 except at n = 2.
inline SliceVerdict twist_verdict(long n, PrecisionOptions opts = {}) {
  SliceVerdict out;
  if (n == 0) {
    out.verdict = SliceObstruction::NoObstruction;
    out.reason = "K_0 is the unknot";
    return out;
  }
  if (n < 0) {
    const SeifertMatrix v = twist_seifert_matrix(n);
    const SignatureEngine engine(v, opts);
    // With 4n+1 < 0 the two unit roots are conjugate at x0 and 1-x0, so
    // the midpoint of the sector between them is exactly 1/2; the primary
    // witness sigma_{-1} and the fallback therefore sample the same point.
    const UnitCirclePoint half(1, 2);
    const long sigma = engine.signature_at(half);
    if (sigma == 0)
      throw std::logic_error("twist knot with n < 0 must have nonzero sigma at -1");
    out.verdict = SliceObstruction::ObstructedSignature;
    out.signature_witness = {half, sigma};
    out.reason = "sigma at omega = -1 is " + std::to_string(sigma);
    return out;
  }
  const Int disc = Int(4) * n + 1;
  const auto root = exact_sqrt(disc);
  if (!root) {
    out.verdict = SliceObstruction::ObstructedFoxMilnor;
    out.fox_milnor_witness = disc;
    out.reason = "4n+1 = " + disc.get_str() + " is not a perfect square";
    return out;
  }
  // 4n+1 = (2m+1)^2 gives n = m(m+1); normalize to m >= 1.
  const long m = Int((*root - 1) / 2).get_si();
  if (m == 1) {
    out.verdict = SliceObstruction::NoObstruction;
    out.reason = "n = 2: the derived curve T(1,2) is the unknot";
    return out;
  }
  const Rational witness = l2_closed_form(TorusKnotParams(m, m + 1));
  if (sgn(witness) == 0)
    throw std::logic_error("L2 signature of T(m,m+1) must be nonzero for m >= 2");
  out.verdict = SliceObstruction::ObstructedLTwo;
  out.l2_witness = {m, witness};
  out.reason = "n = m(m+1) with m = " + std::to_string(m) +
               "; L2 signature of T(m,m+1) is " + fraction_string(witness);
  return out;
}

// Twist coefficients n = m(m+1) > 0 for which the n-twisted double D_n(K)
// of a knot with L2 signature s_K escapes the obstruction, i.e. integer
// solutions of (m-1)(m+2) = 3 s_K. Both roots m and -1-m give the same n,
// so there is at most one candidate; for s_K = 0 it is n = 2.
inline std::vector<Int> double_candidates(const Rational& s_K) {
  std::vector<Int> out;
  Rational three_s = Rational(3) * s_K;
  three_s.canonicalize();
  if (three_s.get_den() != 1) return out;
  const Int disc = Int(9) + 4 * three_s.get_num();  // of m^2 + m - (2 + 3s)
  const auto root = exact_sqrt(disc);
  if (!root) return out;
  // disc = 9 + 12 s_K is odd, so the root is odd and m is integral.
  const Int m = (*root - 1) / 2;
  const Int n = m * (m + 1);
  if (sgn(n) > 0) out.push_back(n);
  return out;
}

// L2 signature is additive under connected sum.
inline LTwoSignature connected_sum_l2(const LTwoSignature& a, const LTwoSignature& b) {
  return a + b;
}

}  // namespace knotsig

#endif  // KNOTSIG_SLICE_HPP
