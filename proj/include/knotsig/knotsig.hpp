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

#ifndef KNOTSIG_KNOTSIG_HPP
#define KNOTSIG_KNOTSIG_HPP

#include "knotsig/numeric.hpp"
#include "knotsig/polynomial.hpp"
#include "knotsig/matrix.hpp"
#include "knotsig/knot_core.hpp"
#include "knotsig/interval.hpp"
#include "knotsig/inertia.hpp"
#include "knotsig/sig_engine.hpp"
#include "knotsig/torus_analytics.hpp"
#include "knotsig/l2.hpp"
#include "knotsig/slice.hpp"
#include "knotsig/verify.hpp"

#endif  // KNOTSIG_KNOTSIG_HPP
