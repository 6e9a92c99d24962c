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

#include <utility>
#include <vector>

#include "zxopt/graph_like.hpp"
#include "zxopt/rewrite_step.hpp"
#include "zxopt/zx_diagram.hpp"

namespace zxopt {

class RewriteError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Removes the interior spider u with phase +-pi/2: complements its
/// neighborhood's Hadamard adjacency and subtracts u's phase from every
/// neighbor. Semantics preserved up to scalar.
ZxDiagram lc_simp(const ZxDiagram& d, VertexId u);

/// Removes a Hadamard-adjacent interior pair u, v with Pauli phases:
/// complements edges between the common neighborhood A, u's exclusive
/// neighborhood B and v's exclusive neighborhood C; B gains v's phase, C
/// gains u's phase, A gains both plus pi.
ZxDiagram pivot_simp(const ZxDiagram& d, VertexId u, VertexId v);

/// Normalizes to graph-like form and applies lc_simp, pivot_simp and
/// interior identity removal until no rule matches. Returns the result with
/// its rewrite trace.
std::pair<ZxDiagram, std::vector<RewriteStep>> simplify_to_fixpoint(
    const ZxDiagram& d);

/// Generalized local complementation (arbitrary phase, arbitrary wiring):
/// complements the Hadamard adjacency among N(u), shifts each neighbor's
/// phase by +pi/2 and unfuses u's phase onto a two-spider chain carrying an
/// X(-pi/2) correction. Eligible for any non-boundary u with more than one
/// spider neighbor. Result is renormalized to graph-like form.
ZxDiagram congruence_lc(const ZxDiagram& d, VertexId u);

/// Generalized pivot: complements connectivity between the three
/// neighborhood classes of the Hadamard-adjacent pair (u, v), adds pi to
/// the common neighborhood, and exchanges the qubits' phase/boundary
/// content through Hadamard-corrected carrier spiders.
ZxDiagram congruence_pivot(const ZxDiagram& d, VertexId u, VertexId v);

enum class CongruenceKind { LocalComplement, Pivot };

struct CongruenceSubject {
  VertexId u = 0;
  VertexId v = 0;  // unused for LC

  bool operator==(const CongruenceSubject&) const = default;
};

/// Exact eligibility lists: spiders of degree > 1 for LC; Hadamard-adjacent
/// non-boundary pairs for pivot. Ascending id order.
std::vector<CongruenceSubject> eligible_subjects(const ZxDiagram& d,
                                                 CongruenceKind kind);

}  // namespace zxopt
