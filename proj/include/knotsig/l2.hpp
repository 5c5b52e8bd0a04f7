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

#ifndef KNOTSIG_L2_HPP
#define KNOTSIG_L2_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "knotsig/sig_engine.hpp"
#include "knotsig/torus_analytics.hpp"

namespace knotsig {

// The L2 signature: the integral of the omega-signatures over the unit
// circle, normalized to total measure 1. Exact rational throughout; the
// circle is parametrized by x in [0,1) so sector widths carry no 2 pi.
using LTwoSignature = Rational;

// Integral of the step function encoded by a profile:
//   2 sum_{i=1}^{n-1} (x_{i+1} - x_i) sum_{k<=i} j_K(x_k).
// The sectors (0, x_1) and (x_n, 1) contribute nothing: the signature is 0
// just after x = 0, and the jumps must cancel by conjugation symmetry --
// asserted here rather than assumed.
inline LTwoSignature l2_from_profile(const SignatureProfile& profile) {
  if (profile.jumps.size() != profile.breakpoints.size())
    throw std::invalid_argument("profile arrays disagree in length");
  for (std::size_t k = 0; k < profile.size(); ++k) {
    if (profile.breakpoints[k].is_zero())
      throw std::invalid_argument("x = 0 is never a jump point");
    if (k > 0 && !(profile.breakpoints[k - 1] < profile.breakpoints[k]))
      throw std::invalid_argument("profile breakpoints must be strictly increasing");
  }
  if (profile.total_jump() != 0)
    throw InconsistentProfile("profile jumps do not sum to zero");

  Rational integral(0);
  Int cumulative(0);
  for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
    cumulative += profile.jumps[i];
    const Rational width = profile.breakpoints[i + 1].value() - profile.breakpoints[i].value();
    integral += width * Rational(cumulative);
  }
  integral *= 2;
  integral.canonicalize();
  return integral;
}

enum class L2Route { closed, weighted, profile };

inline const char* route_name(L2Route route) {
  switch (route) {
    case L2Route::closed: return "closed";
    case L2Route::weighted: return "weighted";
    case L2Route::profile: return "profile";
  }
  return "?";
}

// Builds the exact step profile of T_{p,q} from the combinatorial jump
// function -- no matrices involved.
inline SignatureProfile torus_jump_profile(const TorusKnotParams& params) {
  SignatureProfile profile;
  profile.breakpoints = circle_breakpoints(params);
  profile.jumps.reserve(profile.breakpoints.size());
  const long pq = params.pq();
  for (const UnitCirclePoint& x : profile.breakpoints) {
    const Int n = x.numerator() * (pq / x.denominator().get_si());
    profile.jumps.push_back(jump_torus(params, n.get_si()));
  }
  return profile;
}

// The L2 signature of T_{p,q} by the selected route. All three routes
// agree exactly; the verification sweeps enforce that.
inline LTwoSignature l2_torus(const TorusKnotParams& params, L2Route route) {
  switch (route) {
    case L2Route::closed: return l2_closed_form(params);
    case L2Route::weighted: return l2_weighted_jump_form(params);
    case L2Route::profile: return l2_from_profile(torus_jump_profile(params));
  }
  throw std::invalid_argument("unknown route");
}

// Generic route for an arbitrary Seifert matrix with known circle roots:
// build the profile with the signature engine, then integrate. A knot
// whose Alexander polynomial has no unit roots integrates to zero.
inline LTwoSignature l2_generic(const SeifertMatrix& v,
                                const std::vector<UnitCirclePoint>& breakpoints,
                                PrecisionOptions opts = {}) {
  if (breakpoints.empty()) return Rational(0);
  return l2_from_profile(SignatureEngine(v, opts).profile(breakpoints));
}

}  // namespace knotsig

#endif  // KNOTSIG_L2_HPP
