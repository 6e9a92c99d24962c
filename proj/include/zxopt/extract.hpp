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

#include <stdexcept>
#include <string>

#include "zxopt/circuit.hpp"
#include "zxopt/zx_diagram.hpp"

namespace zxopt {

/// Raised when no frontier progress is possible. Indicates a diagram
/// without the flow structure extraction depends on; along the supported
/// pipeline this means an upstream bug, so it surfaces loudly.
class ExtractionStuck : public std::runtime_error {
 public:
  explicit ExtractionStuck(const std::string& detail)
      : std::runtime_error("extraction stuck: " + detail) {}
};

/// Recovers a circuit from a graph-like diagram by peeling spiders off the
/// output side: frontier phases become phase gates, frontier-frontier
/// Hadamard edges become CZs, and frontier advancement runs GF(2) Gaussian
/// elimination on the frontier/neighbor biadjacency matrix, one CNOT per
/// row operation (pivot ties broken by lowest qubit index). The raw result
/// uses {H, ZPhase, CNOT, CZ} only; no circuit-level cleanup is applied.
Circuit extract_circuit(const ZxDiagram& d);

struct ExtractionReport {
  int cnot_count = 0;
  int cz_count = 0;
  int h_count = 0;
  int phase_count = 0;
};

/// Gate counts of the raw extracted circuit.
ExtractionReport extraction_report(const ZxDiagram& d);

}  // namespace zxopt
