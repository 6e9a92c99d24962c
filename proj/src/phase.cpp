// Copyright 2026 zxopt contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxopt/phase.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>

namespace zxopt {

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Phase: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  // Wrap into [0, 2*pi): num/den mod 2.
  num %= 2 * den;
  if (num < 0) num += 2 * den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Phase Phase::operator+(const Phase& o) const {
  return Phase(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Phase Phase::operator-(const Phase& o) const {
  return Phase(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Phase Phase::operator-() const { return Phase(-num_, den_); }

double Phase::radians() const {
  return static_cast<double>(num_) / static_cast<double>(den_) *
         std::numbers::pi;
}

std::string Phase::str() const {
  if (num_ == 0) return "0";
  if (den_ == 1) return num_ == 1 ? "pi" : std::to_string(num_) + "*pi";
  return std::to_string(num_) + "*pi/" + std::to_string(den_);
}

}  // namespace zxopt
