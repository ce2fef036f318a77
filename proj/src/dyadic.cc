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

#include "toucher/dyadic.h"

#include <algorithm>
#include <stdexcept>

namespace toucher {

namespace {

constexpr int kMaxExponent = 62;

std::int64_t shift_left_checked(std::int64_t value, int bits) {
  if (bits == 0 || value == 0) return value;
  if (bits >= 63) throw std::overflow_error("DyadicValue overflow");
  std::int64_t limit = INT64_MAX >> bits;
  if (value > limit || value < -limit) throw std::overflow_error("DyadicValue overflow");
  return value * (std::int64_t{1} << bits);
}

}  // namespace

DyadicValue::DyadicValue(std::int64_t integer) : numerator_(integer), exponent_(0) {}

DyadicValue::DyadicValue(std::int64_t numerator, int exponent)
    : numerator_(numerator), exponent_(exponent) {
  if (exponent < 0) {
    numerator_ = shift_left_checked(numerator, -exponent);
    exponent_ = 0;
  }
  normalize();
}

DyadicValue DyadicValue::pow2_neg(int k) {
  if (k < 0) throw std::invalid_argument("pow2_neg requires k >= 0");
  if (k > kMaxExponent) throw std::overflow_error("DyadicValue exponent too large");
  return DyadicValue(1, k);
}

void DyadicValue::normalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && numerator_ % 2 == 0) {
    numerator_ /= 2;
    --exponent_;
  }
  if (exponent_ > kMaxExponent) throw std::overflow_error("DyadicValue exponent too large");
}

std::int64_t DyadicValue::to_integer() const {
  if (!is_integer()) throw std::logic_error("DyadicValue is not an integer");
  return numerator_;
}

double DyadicValue::to_double() const {
  double v = static_cast<double>(numerator_);
  for (int i = 0; i < exponent_; ++i) v /= 2.0;
  return v;
}

DyadicValue DyadicValue::scaled(int k) const { return DyadicValue(numerator_, exponent_ - k); }

DyadicValue& DyadicValue::operator+=(const DyadicValue& other) {
  int e = std::max(exponent_, other.exponent_);
  std::int64_t a = shift_left_checked(numerator_, e - exponent_);
  std::int64_t b = shift_left_checked(other.numerator_, e - other.exponent_);
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) throw std::overflow_error("DyadicValue overflow");
  numerator_ = sum;
  exponent_ = e;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const DyadicValue& a, const DyadicValue& b) {
  int e = std::max(a.exponent_, b.exponent_);
  std::int64_t x = shift_left_checked(a.numerator_, e - a.exponent_);
  std::int64_t y = shift_left_checked(b.numerator_, e - b.exponent_);
  return x <=> y;
}

std::string DyadicValue::to_string() const {
  if (exponent_ == 0) return std::to_string(numerator_);
  return std::to_string(numerator_) + "/" + std::to_string(std::int64_t{1} << exponent_);
}

std::ostream& operator<<(std::ostream& os, const DyadicValue& v) { return os << v.to_string(); }

}  // namespace toucher
