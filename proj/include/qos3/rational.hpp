// Copyright 2026 The QOS3 Authors
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

#ifndef QOS3_RATIONAL_HPP
#define QOS3_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qos3 {

/// Exact fraction of 64-bit integers, always normalized (gcd 1, positive
/// denominator). Probabilities and efficiencies in this project are tiny
/// fractions, so no overflow care is needed beyond normalization.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  explicit Rational(std::int64_t n) : num(n), den(1) {}

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Rational operator+(const Rational &o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational operator*(const Rational &o) const { return Rational(num * o.num, den * o.den); }
  Rational operator/(const Rational &o) const {
    if (o.num == 0) throw std::invalid_argument("rational division by zero");
    return Rational(num * o.den, den * o.num);
  }
  bool operator==(const Rational &o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational &o) const { return !(*this == o); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace qos3

#endif
