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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxopt/circuit.hpp"
#include "zxopt/zx_diagram.hpp"

namespace zxopt {

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense complex matrix of shape 2^n_out x 2^n_in. Row/column bit order puts
/// qubit 0 (respectively the first output/input) in the most significant
/// position, matching the usual tensor-product convention.
struct LinearMap {
  int n_out_bits = 0;
  int n_in_bits = 0;
  std::vector<std::complex<double>> data;

  std::size_t rows() const { return std::size_t{1} << n_out_bits; }
  std::size_t cols() const { return std::size_t{1} << n_in_bits; }
  std::complex<double>& at(std::size_t r, std::size_t c) {
    return data[r * cols() + c];
  }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return data[r * cols() + c];
  }
  static LinearMap identity(int n_bits);
  std::string str() const;
};

/// Default evaluation caps; desk-scale verification only. The circuit cap
/// counts qubits, the diagram cap total boundary wires. Both can be raised
/// through the ZXOPT_ORACLE_CAP environment variable (qubits; the wire cap
/// is twice that).
int oracle_qubit_cap();

enum class ContractionOrder { Greedy, Sequential };

/// Multiplies out the gate unitaries in temporal order.
LinearMap evaluate_circuit(const Circuit& c, int qubit_cap = 0);

/// Contracts the diagram's spider tensors over its wires; Hadamard edges
/// interpose the H matrix. Boundary order follows the input/output lists.
/// Greedy ordering contracts the smallest intermediate first.
LinearMap evaluate_diagram(const ZxDiagram& d, int wire_cap = 0,
                           ContractionOrder order = ContractionOrder::Greedy);

/// True when a == lambda * b for some nonzero complex lambda, to entrywise
/// tolerance tol. Lambda is fixed from the largest-magnitude entry of b.
bool equal_up_to_scalar(const LinearMap& a, const LinearMap& b,
                        double tol = 1e-8);

/// Oracle check of circuit/diagram agreement, used across the test suites.
bool circuit_matches_diagram(const Circuit& c, const ZxDiagram& d,
                             double tol = 1e-8);

}  // namespace zxopt
