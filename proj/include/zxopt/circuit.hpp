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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxopt/phase.hpp"

namespace zxopt {

enum class GateKind { H, ZPhase, XPhase, Cnot, Cz };

/// A single gate. Two-qubit kinds use (q0, q1); for Cnot, q0 is the control
/// and q1 the target. Phase is meaningful only for ZPhase/XPhase.
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  Phase phase;

  static Gate h(int q) { return {GateKind::H, q, -1, Phase()}; }
  static Gate z_phase(int q, Phase p) { return {GateKind::ZPhase, q, -1, p}; }
  static Gate x_phase(int q, Phase p) { return {GateKind::XPhase, q, -1, p}; }
  static Gate t(int q) { return z_phase(q, Phase(1, 4)); }
  static Gate s(int q) { return z_phase(q, Phase(1, 2)); }
  static Gate z(int q) { return z_phase(q, Phase(1, 1)); }
  static Gate x(int q) { return x_phase(q, Phase(1, 1)); }
  static Gate cnot(int control, int target) {
    return {GateKind::Cnot, control, target, Phase()};
  }
  static Gate cz(int a, int b) { return {GateKind::Cz, a, b, Phase()}; }

  bool is_two_qubit() const {
    return kind == GateKind::Cnot || kind == GateKind::Cz;
  }
  bool touches(int q) const { return q0 == q || (is_two_qubit() && q1 == q); }

  bool operator==(const Gate&) const = default;
};

/// An ordered gate list over a fixed qubit register. Values are immutable in
/// spirit: all optimization passes return fresh circuits.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}
  Circuit(int n, std::vector<Gate> gs) : n_qubits(n), gates(std::move(gs)) {}

  void add(const Gate& g) { gates.push_back(g); }

  /// Throws std::invalid_argument on out-of-range or coincident qubits.
  void validate() const;

  bool operator==(const Circuit&) const = default;
};

struct ComplexityReport {
  int two_qubit_count = 0;
  int single_qubit_count = 0;
  int t_count = 0;
  int comp = 0;
};

/// Weighted gate-count complexity: 10 per two-qubit gate plus 1 per
/// single-qubit gate. The T-count tallies phase gates at odd multiples of
/// pi/4.
ComplexityReport complexity(const Circuit& c);

}  // namespace zxopt
