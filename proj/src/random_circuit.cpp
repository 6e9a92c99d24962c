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

#include "zxopt/random_circuit.hpp"

#include <stdexcept>

#include "zxopt/rng.hpp"

namespace zxopt {

Circuit random_circuit(int n_qubits, int n_gates, double p_t, double p_had,
                       std::uint64_t rng_seed) {
  if (n_qubits < 2)
    throw std::invalid_argument("random_circuit: need at least 2 qubits");
  if (n_gates < 0)
    throw std::invalid_argument("random_circuit: negative gate count");
  if (p_t < 0.0 || p_t > 1.0 || p_had < 0.0 || p_had > 1.0 ||
      p_t + p_had > 1.0)
    throw std::invalid_argument("random_circuit: invalid gate probabilities");

  Rng rng(rng_seed);
  Circuit c(n_qubits);
  for (int i = 0; i < n_gates; ++i) {
    const double u = rng.uniform();
    if (u < p_had) {
      c.add(Gate::h(rng.uniform_int(n_qubits)));
    } else if (u < p_had + p_t) {
      c.add(Gate::t(rng.uniform_int(n_qubits)));
    } else {
      const int control = rng.uniform_int(n_qubits);
      int target = rng.uniform_int(n_qubits - 1);
      if (target >= control) ++target;
      c.add(Gate::cnot(control, target));
    }
  }
  return c;
}

}  // namespace zxopt
