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

#include "zxopt/circuit.hpp"

namespace zxopt {

void Circuit::validate() const {
  if (n_qubits <= 0) throw std::invalid_argument("circuit has no qubits");
  for (const Gate& g : gates) {
    if (g.q0 < 0 || g.q0 >= n_qubits)
      throw std::invalid_argument("gate qubit out of range");
    if (g.is_two_qubit()) {
      if (g.q1 < 0 || g.q1 >= n_qubits)
        throw std::invalid_argument("gate qubit out of range");
      if (g.q0 == g.q1)
        throw std::invalid_argument("two-qubit gate with coincident qubits");
    }
  }
}

ComplexityReport complexity(const Circuit& c) {
  ComplexityReport r;
  for (const Gate& g : c.gates) {
    if (g.is_two_qubit()) {
      ++r.two_qubit_count;
    } else {
      ++r.single_qubit_count;
      if ((g.kind == GateKind::ZPhase || g.kind == GateKind::XPhase) &&
          g.phase.is_t_like())
        ++r.t_count;
    }
  }
  r.comp = 10 * r.two_qubit_count + r.single_qubit_count;
  return r;
}

}  // namespace zxopt
