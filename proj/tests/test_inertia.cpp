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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "knotsig/inertia.hpp"
#include "oracles.hpp"

using namespace knotsig;

namespace {

SymmetricIntervalMatrix from_longs(const std::vector<long>& entries, std::size_t n,
                                   mpfr_prec_t prec = 64) {
  SymmetricIntervalMatrix m(n, prec);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Interval::from_long(entries[i * n + j], prec);
  return m;
}

}  // namespace

TEST_CASE("interval arithmetic encloses exact results") {
  const auto two = Interval::from_long(2, 64);
  const auto third = Interval::from_rational(make_rational(1, 3), 64);
  const auto prod = two * third;
  CHECK(prod.sign() == 1);
  CHECK(prod.midpoint_d() == Catch::Approx(2.0 / 3.0).epsilon(1e-15));
  const auto diff = third - third;
  CHECK(diff.contains_zero());
  CHECK((two / third).midpoint_d() == Catch::Approx(6.0).epsilon(1e-15));
  CHECK_THROWS_AS(two / diff, std::domain_error);
  CHECK((-two).sign() == -1);
}

TEST_CASE("trig enclosures hit exact values") {
  const auto c_half = cos_two_pi(make_rational(1, 2), 96);  // cos(pi) = -1
  CHECK(c_half.sign() == -1);
  CHECK(c_half.midpoint_d() == Catch::Approx(-1.0).epsilon(1e-20));
  const auto s_quarter = sin_two_pi(make_rational(1, 4), 96);  // sin(pi/2) = 1
  CHECK(s_quarter.midpoint_d() == Catch::Approx(1.0).epsilon(1e-20));
  const auto s_half = sin_two_pi(make_rational(1, 2), 96);  // sin(pi) = 0
  CHECK(s_half.contains_zero());
  const auto c_sixth = cos_two_pi(make_rational(1, 6), 96);  // cos(pi/3) = 1/2
  CHECK(c_sixth.midpoint_d() == Catch::Approx(0.5).epsilon(1e-20));
}

TEST_CASE("certified inertia on definite and indefinite matrices") {
  auto id3 = from_longs({1, 0, 0, 0, 1, 0, 0, 0, 1}, 3);
  auto r = certified_inertia(std::move(id3));
  REQUIRE(r);
  CHECK(r->positive == 3);
  CHECK(r->negative == 0);

  auto mixed = from_longs({1, 0, 0, -2}, 2);
  r = certified_inertia(std::move(mixed));
  REQUIRE(r);
  CHECK(r->positive == 1);
  CHECK(r->negative == 1);

  // zero diagonal forces the 2x2 hyperbolic pivot
  auto hyperbolic = from_longs({0, 1, 1, 0}, 2);
  r = certified_inertia(std::move(hyperbolic));
  REQUIRE(r);
  CHECK(r->positive == 1);
  CHECK(r->negative == 1);

  auto hyperbolic4 = from_longs({0, 0, 0, 3, 0, 0, -2, 0, 0, -2, 0, 0, 3, 0, 0, 0}, 4);
  r = certified_inertia(std::move(hyperbolic4));
  REQUIRE(r);
  CHECK(r->positive == 2);
  CHECK(r->negative == 2);
}

TEST_CASE("certified inertia refuses singular enclosures") {
  auto singular = from_longs({1, 1, 1, 1}, 2);
  CHECK_FALSE(certified_inertia(std::move(singular)));
  auto zero = from_longs({0}, 1);
  CHECK_FALSE(certified_inertia(std::move(zero)));
}

TEST_CASE("certified inertia agrees with exact rational elimination") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> entry(-6, 6);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    std::vector<long> entries(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) entries[i * n + j] = entries[j * n + i] = entry(rng);

    std::vector<Rational> exact(n * n);
    for (std::size_t k = 0; k < n * n; ++k) exact[k] = Rational(entries[k]);
    const auto oracle = testing::exact_symmetric_inertia(exact, n);

    const auto certified = certified_inertia(from_longs(entries, n));
    if (oracle.zero > 0) {
      CHECK_FALSE(certified);  // singular matrices can never certify
    } else {
      REQUIRE(certified);
      CHECK(static_cast<long>(certified->positive) == oracle.positive);
      CHECK(static_cast<long>(certified->negative) == oracle.negative);
      ++checked;
    }
  }
  CHECK(checked > 200);  // the sweep must be mostly nonsingular
}
