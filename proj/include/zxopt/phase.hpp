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

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace zxopt {

/// An exact phase angle, stored as a rational multiple of pi and kept
/// normalized into [0, 2*pi). All phase arithmetic in the diagram layer is
/// exact, so Clifford and T-gate tests reduce to divisibility checks.
class Phase {
 public:
  constexpr Phase() = default;

  /// Constructs num/den * pi, reduced and wrapped into [0, 2*pi).
  Phase(std::int64_t num, std::int64_t den);

  static Phase zero() { return Phase(); }
  static Phase pi() { return Phase(1, 1); }
  static Phase pi_half() { return Phase(1, 2); }
  static Phase quarter() { return Phase(1, 4); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_pi() const { return num_ == 1 && den_ == 1; }
  /// Multiple of pi (0 or pi).
  bool is_pauli() const { return den_ == 1; }
  /// Multiple of pi/2.
  bool is_clifford() const { return den_ == 1 || den_ == 2; }
  /// Exactly +pi/2 or -pi/2 (i.e. 3*pi/2 after wrapping).
  bool is_proper_clifford() const { return den_ == 2; }
  /// Odd multiple of pi/4; such phases are counted by the T-count.
  bool is_t_like() const { return den_ == 4; }

  Phase operator+(const Phase& o) const;
  Phase operator-(const Phase& o) const;
  Phase operator-() const;
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }

  bool operator==(const Phase&) const = default;
  auto operator<=>(const Phase&) const = default;

  double radians() const;
  std::string str() const;

 private:
  // Invariant: den_ >= 1, gcd(num_, den_) == 1, 0 <= num_/den_ < 2.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace zxopt
