// Copyright 2026 The Toucher Lab Authors
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

#include <doctest.h>

#include <random>

#include "toucher/dyadic.h"
#include "toucher/rational.h"

using namespace toucher;

TEST_CASE("dyadic values are exact and normalised") {
  CHECK(DyadicValue::pow2_neg(0) == DyadicValue(1));
  CHECK(DyadicValue::pow2_neg(3).to_string() == "1/8");
  CHECK(DyadicValue(6, 2).to_string() == "3/2");
  CHECK(DyadicValue(3, -2) == DyadicValue(12));
  CHECK(DyadicValue(0, 5).exponent() == 0);
  CHECK((DyadicValue::pow2_neg(2) + DyadicValue::pow2_neg(2)) == DyadicValue::pow2_neg(1));
  CHECK(DyadicValue::pow2_neg(4).scaled(4) == DyadicValue(1));
}

TEST_CASE("dyadic sums of many small terms stay exact") {
  // 2^k copies of 2^-k sum to exactly one for every k, where doubles drift
  // only beyond their mantissa; the exact type must never drift.
  for (int k = 0; k <= 20; ++k) {
    DyadicValue sum(0);
    for (int i = 0; i < (1 << k); ++i) sum += DyadicValue::pow2_neg(k);
    CHECK(sum == DyadicValue(1));
  }
  DyadicValue tiny = DyadicValue(1) + DyadicValue::pow2_neg(60);
  CHECK(tiny != DyadicValue(1));
  CHECK(tiny > DyadicValue(1));
  CHECK((tiny - DyadicValue(1)) == DyadicValue::pow2_neg(60));
}

TEST_CASE("dyadic ordering and errors") {
  CHECK(DyadicValue(-1, 1) < DyadicValue(0));
  CHECK(DyadicValue(3, 2) < DyadicValue(1));
  CHECK_THROWS_AS(DyadicValue::pow2_neg(-1), std::invalid_argument);
  CHECK_THROWS_AS(DyadicValue::pow2_neg(200), std::overflow_error);
  CHECK_THROWS_AS(DyadicValue(1, 2).to_integer(), std::logic_error);
  CHECK(DyadicValue(5).to_integer() == 5);
}

TEST_CASE("rational arithmetic") {
  const Rational a(3, 16), b(1, 4);
  CHECK((a + b) == Rational(7, 16));
  CHECK((a - b) == Rational(-1, 16));
  CHECK((a * b) == Rational(3, 64));
  CHECK((a / b) == Rational(3, 4));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-19, 8).ceil() == -2);
  CHECK(Rational(-19, 8).floor() == -3);
  CHECK(Rational(9, 8).ceil() == 2);
  CHECK(Rational(9, 8).floor() == 1);
  CHECK(Rational(4).to_string() == "4/1");
  CHECK(Rational(DyadicValue(3, 3)) == Rational(3, 8));
  CHECK(Rational(1, 6) < Rational(3, 16));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational floor and ceil agree with integer division") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t num = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const std::int64_t den = static_cast<std::int64_t>(rng() % 50) + 1;
    const Rational r(num, den);
    CHECK(Rational(r.floor()) <= r);
    CHECK(r < Rational(r.floor() + 1));
    CHECK(Rational(r.ceil()) >= r);
    CHECK(r > Rational(r.ceil() - 1));
  }
}
