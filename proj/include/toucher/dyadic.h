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

#ifndef TOUCHER_DYADIC_H_
#define TOUCHER_DYADIC_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace toucher {

// Exact value numerator / 2^exponent in canonical form: the numerator is odd,
// or zero with exponent 0. Overflow throws std::overflow_error.
class DyadicValue {
 public:
  DyadicValue() = default;
  DyadicValue(std::int64_t integer);  // NOLINT: implicit from integers is intended
  DyadicValue(std::int64_t numerator, int exponent);

  // 2^-k for k >= 0.
  static DyadicValue pow2_neg(int k);

  std::int64_t numerator() const { return numerator_; }
  int exponent() const { return exponent_; }

  bool is_integer() const { return exponent_ == 0; }
  // Requires is_integer().
  std::int64_t to_integer() const;
  double to_double() const;

  // Multiply by 2^k (k may be negative).
  DyadicValue scaled(int k) const;

  DyadicValue operator-() const { return DyadicValue(-numerator_, exponent_); }
  DyadicValue& operator+=(const DyadicValue& other);
  DyadicValue& operator-=(const DyadicValue& other) { return *this += -other; }
  friend DyadicValue operator+(DyadicValue a, const DyadicValue& b) { return a += b; }
  friend DyadicValue operator-(DyadicValue a, const DyadicValue& b) { return a -= b; }

  friend bool operator==(const DyadicValue&, const DyadicValue&) = default;
  friend std::strong_ordering operator<=>(const DyadicValue& a, const DyadicValue& b);

  // "p" for integers, "p/2^k" rendered as "p/q".
  std::string to_string() const;

 private:
  void normalize();

  std::int64_t numerator_ = 0;
  int exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const DyadicValue& v);

}  // namespace toucher

#endif  // TOUCHER_DYADIC_H_
