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

#include <catch2/catch_amalgamated.hpp>

#include "knotsig/polynomial.hpp"

using namespace knotsig;

TEST_CASE("polynomial arithmetic basics") {
  const IntPoly a{1, -1, 1};  // 1 - t + t^2
  const IntPoly b{0, 1};      // t
  CHECK(a.degree() == 2);
  CHECK((a * b).degree() == 3);
  CHECK((a + (-a)).is_zero());
  CHECK(IntPoly{}.degree() == -1);
  CHECK(a.eval(Int(2)) == 3);
  CHECK(a.eval(make_rational(1, 2)) == make_rational(3, 4));
  CHECK(IntPoly::one_minus_power(0).is_zero());
  CHECK(IntPoly::one_minus_power(3) == IntPoly{1, 0, 0, -1});
}

TEST_CASE("exact division and divisibility") {
  const IntPoly num = IntPoly::one_minus_power(6);
  const IntPoly den = IntPoly::one_minus_power(2);
  const IntPoly q = divexact(num, den);
  CHECK(q == IntPoly{1, 0, 1, 0, 1});  // 1 + t^2 + t^4
  CHECK(divides(den, num));
  CHECK_FALSE(divides(IntPoly::one_minus_power(4), num));
  CHECK_THROWS_AS(divexact(IntPoly{1, 1, 1}, IntPoly{1, 1}), std::domain_error);
  CHECK_THROWS_AS(divexact(IntPoly{1}, IntPoly{}), std::domain_error);
  // non-unit leading coefficients are outside this divider's contract
  CHECK_THROWS_AS(divexact(IntPoly{2, 4}, IntPoly{0, 2}), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(2) == IntPoly{1, 1});
  CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});

  // phi(105) = 48 and the t^7 coefficient is the first -2 ever to appear
  const IntPoly phi105 = cyclotomic(105);
  CHECK(phi105.degree() == 48);
  CHECK(phi105.coeff(7) == -2);

  // product over divisors reassembles t^n - 1
  for (unsigned long n : {6UL, 10UL, 30UL}) {
    IntPoly prod = IntPoly::constant(Int(1));
    for (unsigned long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    CHECK(prod == IntPoly::power_minus_one(n));
  }
}

TEST_CASE("associate equality is equality up to +-t^k") {
  const IntPoly a{1, -1, 1};
  CHECK(associate_equal(a, a));
  CHECK(associate_equal(a, IntPoly{0, 0, 1, -1, 1}));   // t^2 * a
  CHECK(associate_equal(a, IntPoly{0, -1, 1, -1}));     // -t * a
  CHECK_FALSE(associate_equal(a, IntPoly{1, 1, 1}));
  CHECK_FALSE(associate_equal(a, IntPoly{1, -1, 1, 1}));
  CHECK(associate_equal(IntPoly{}, IntPoly{}));
  CHECK_FALSE(associate_equal(IntPoly{}, a));
}
