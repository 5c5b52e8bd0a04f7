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

#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "knotsig/knot_core.hpp"

using namespace knotsig;

TEST_CASE("torus knot parameter validation") {
  CHECK_NOTHROW(TorusKnotParams(1, 1));
  CHECK_NOTHROW(TorusKnotParams(1, 7));
  CHECK_NOTHROW(TorusKnotParams(3, 2));
  CHECK_THROWS_AS(TorusKnotParams(4, 6), std::domain_error);
  CHECK_THROWS_AS(TorusKnotParams(0, 5), std::domain_error);
  CHECK_THROWS_AS(TorusKnotParams(2, -3), std::domain_error);
}

TEST_CASE("twist knot Seifert matrix is [[-1,1],[0,n]]") {
  for (long n : {-1L, 0L, 2L, 7L}) {
    const SeifertMatrix v = twist_seifert_matrix(n);
    REQUIRE(v.size() == 2);
    CHECK(v.entry(0, 0) == -1);
    CHECK(v.entry(0, 1) == 1);
    CHECK(v.entry(1, 0) == 0);
    CHECK(v.entry(1, 1) == n);
  }
}

TEST_CASE("twist knot Alexander polynomial -n t^2 + (2n+1) t - n") {
  for (long n = -6; n <= 6; ++n) {
    const IntPoly delta = alexander_polynomial(twist_seifert_matrix(n));
    CHECK(delta == IntPoly{-n, 2 * n + 1, -n});
    // determinant condition at t = 1
    const Int at_one = delta.eval(Int(1));
    CHECK((at_one == 1 || at_one == -1));
  }
  CHECK(alexander_polynomial(twist_seifert_matrix(2)) == IntPoly{-2, 5, -2});
}

TEST_CASE("Seifert matrix validation rejects bad input") {
  IntMatrix odd(1, 1);
  odd(0, 0) = 1;
  CHECK_THROWS_AS(SeifertMatrix(odd), std::domain_error);
  IntMatrix degenerate(2, 2);  // V - V^T = 0
  degenerate(0, 0) = 1;
  degenerate(1, 1) = 1;
  CHECK_THROWS_AS(SeifertMatrix(degenerate), std::domain_error);
  IntMatrix rect(2, 4);
  CHECK_THROWS_AS(SeifertMatrix(rect), std::domain_error);
}

TEST_CASE("torus Seifert matrices: size, unimodularity, unknot") {
  CHECK(torus_seifert_matrix(TorusKnotParams(1, 5)).size() == 0);
  CHECK(torus_seifert_matrix(TorusKnotParams(7, 1)).size() == 0);
  const SeifertMatrix trefoil = torus_seifert_matrix(TorusKnotParams(2, 3));
  REQUIRE(trefoil.size() == 2);
  CHECK(trefoil.entry(0, 0) == -1);
  CHECK(trefoil.entry(0, 1) == 1);
  CHECK(trefoil.entry(1, 0) == 0);
  CHECK(trefoil.entry(1, 1) == -1);
  for (long q = 2; q <= 8; ++q)
    for (long p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnotParams params(p, q);
      const SeifertMatrix v = torus_seifert_matrix(params);
      CHECK(v.size() == static_cast<std::size_t>((p - 1) * (q - 1)));
      const Int d = determinant(v.matrix() - v.matrix().transpose());
      CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("unknot Alexander polynomial is 1") {
  const SeifertMatrix unknot = torus_seifert_matrix(TorusKnotParams(1, 4));
  CHECK(alexander_polynomial(unknot) == IntPoly{1});
  CHECK(torus_alexander_closed(TorusKnotParams(1, 9)) == IntPoly{1});
}

TEST_CASE("torus Alexander polynomial closed form") {
  CHECK(torus_alexander_closed(TorusKnotParams(2, 5)) == IntPoly{1, -1, 1, -1, 1});
  CHECK(torus_alexander_closed(TorusKnotParams(2, 3)) == IntPoly{1, -1, 1});
  CHECK(torus_alexander_closed(TorusKnotParams(3, 4)).degree() == 6);
}

TEST_CASE("determinant route matches closed form up to +-t^k for p,q <= 8") {
  for (long q = 2; q <= 8; ++q)
    for (long p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const TorusKnotParams params(p, q);
      const IntPoly via_det = alexander_polynomial(torus_seifert_matrix(params));
      const IntPoly closed = torus_alexander_closed(params);
      INFO("p=" << p << " q=" << q);
      CHECK(associate_equal(via_det, closed));
      CHECK(closed.degree() == (p - 1) * (q - 1));
    }
}

TEST_CASE("circle breakpoints") {
  const auto b25 = circle_breakpoints(TorusKnotParams(2, 5));
  REQUIRE(b25.size() == 4);
  CHECK(b25[0] == UnitCirclePoint(1, 10));
  CHECK(b25[1] == UnitCirclePoint(3, 10));
  CHECK(b25[2] == UnitCirclePoint(7, 10));
  CHECK(b25[3] == UnitCirclePoint(9, 10));
  CHECK(circle_breakpoints(TorusKnotParams(1, 6)).empty());
  const auto b23 = circle_breakpoints(TorusKnotParams(2, 3));
  REQUIRE(b23.size() == 2);
  CHECK(b23[0] == UnitCirclePoint(1, 6));
  CHECK(b23[1] == UnitCirclePoint(5, 6));

  for (long q = 3; q <= 9; ++q)
    for (long p = 2; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto points = circle_breakpoints(TorusKnotParams(p, q));
      CHECK(points.size() == static_cast<std::size_t>((p - 1) * (q - 1)));
      for (std::size_t k = 0; k < points.size(); ++k) {
        CHECK(sgn(points[k].value()) > 0);
        CHECK(points[k].value() < 1);
        CHECK(points[k].reflected() == points[points.size() - 1 - k]);
      }
    }
}

TEST_CASE("unit circle points normalize and validate") {
  CHECK(UnitCirclePoint(2, 10).value() == make_rational(1, 5));
  CHECK_THROWS_AS(UnitCirclePoint(make_rational(3, 2)), std::domain_error);
  CHECK_THROWS_AS(UnitCirclePoint(make_rational(-1, 4)), std::domain_error);
  CHECK(UnitCirclePoint::wrapped(make_rational(-1, 4)) == UnitCirclePoint(3, 4));
  CHECK(UnitCirclePoint::wrapped(make_rational(9, 4)) == UnitCirclePoint(1, 4));
  CHECK(UnitCirclePoint(1, 3).reflected() == UnitCirclePoint(2, 3));
  CHECK(UnitCirclePoint().reflected() == UnitCirclePoint());
}
