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

#include "zxopt/peephole.hpp"

#include <vector>

namespace zxopt {

namespace {

bool same_two_qubit(const Gate& a, const Gate& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == GateKind::Cnot) return a.q0 == b.q0 && a.q1 == b.q1;
  // CZ is symmetric in its qubits.
  return (a.q0 == b.q0 && a.q1 == b.q1) || (a.q0 == b.q1 && a.q1 == b.q0);
}

// One pass; returns true if anything changed. Gates removed by a rule are
// marked dead and compacted at the end of the pass.
bool pass(std::vector<Gate>& gates) {
  std::vector<bool> dead(gates.size(), false);
  bool changed = false;

  auto next_touching = [&](size_t i, int q) -> size_t {
    for (size_t j = i + 1; j < gates.size(); ++j) {
      if (!dead[j] && gates[j].touches(q)) return j;
    }
    return gates.size();
  };

  for (size_t i = 0; i < gates.size(); ++i) {
    if (dead[i]) continue;
    Gate& g = gates[i];

    if ((g.kind == GateKind::ZPhase || g.kind == GateKind::XPhase) &&
        g.phase.is_zero()) {
      dead[i] = true;
      changed = true;
      continue;
    }

    if (g.kind == GateKind::ZPhase) {
      // Look ahead on this wire; CNOT controls commute with Z rotations,
      // so the scan may pass over them.
      size_t j = next_touching(i, g.q0);
      while (j < gates.size() && gates[j].kind == GateKind::Cnot &&
             gates[j].q0 == g.q0)
        j = next_touching(j, g.q0);
      if (j < gates.size() && gates[j].kind == GateKind::ZPhase) {
        gates[j].phase += g.phase;
        dead[i] = true;
        changed = true;
        continue;
      }
    } else if (g.kind == GateKind::XPhase) {
      size_t j = next_touching(i, g.q0);
      if (j < gates.size() && gates[j].kind == GateKind::XPhase) {
        gates[j].phase += g.phase;
        dead[i] = true;
        changed = true;
        continue;
      }
    } else if (g.kind == GateKind::H) {
      size_t j = next_touching(i, g.q0);
      if (j < gates.size() && gates[j].kind == GateKind::H) {
        dead[i] = dead[j] = true;
        changed = true;
        continue;
      }
    } else {
      // Two-qubit gate: the next gate touching either wire must be the
      // identical gate for the pair to cancel.
      size_t j0 = next_touching(i, g.q0);
      size_t j1 = next_touching(i, g.q1);
      size_t j = j0 < j1 ? j0 : j1;
      if (j0 == j1 && j < gates.size() && same_two_qubit(g, gates[j])) {
        dead[i] = dead[j] = true;
        changed = true;
        continue;
      }
    }
  }

  if (changed) {
    std::vector<Gate> keep;
    keep.reserve(gates.size());
    for (size_t i = 0; i < gates.size(); ++i)
      if (!dead[i]) keep.push_back(gates[i]);
    gates.swap(keep);
  }
  return changed;
}

}  // namespace

Circuit basic_optimize(const Circuit& c) {
  Circuit out = c;
  while (pass(out.gates)) {
  }
  return out;
}

}  // namespace zxopt
