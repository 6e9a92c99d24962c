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

#include "zxopt/circuit.hpp"

namespace zxopt {

inline constexpr double kDefaultPT = 0.2;
inline constexpr double kDefaultPHad = 0.2;

/// Draws n_gates gates independently: H with probability p_had, T with
/// probability p_t, otherwise a CNOT on a uniformly random distinct
/// (control, target) pair. Deterministic for a fixed seed.
Circuit random_circuit(int n_qubits, int n_gates, double p_t, double p_had,
                       std::uint64_t rng_seed);

}  // namespace zxopt
