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

#include "zxopt/circuit.hpp"

namespace zxopt {

/// Gate-level peephole cleanup, run to fixpoint:
///   - fuses adjacent phase gates on the same qubit (ZPhase with ZPhase,
///     XPhase with XPhase),
///   - cancels adjacent involutive pairs: H.H, CNOT.CNOT, CZ.CZ on the same
///     qubits,
///   - drops zero-phase gates,
///   - lets ZPhase commute through CNOT controls when that enables a fusion.
/// The result is unitarily equivalent to the input, never has a higher
/// complexity, and is a fixpoint of the pass.
Circuit basic_optimize(const Circuit& c);

}  // namespace zxopt
