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

#include <map>

#include "zxopt/circuit.hpp"
#include "zxopt/rewrite_step.hpp"
#include "zxopt/zx_diagram.hpp"

namespace zxopt {

/// Translates a circuit into a ZX-diagram: one input and one output
/// boundary per qubit (ordered by qubit index), Hadamards as edge-type
/// toggles, phase gates as single spiders, CNOT as a Z-X pair over a simple
/// edge, CZ as a Hadamard-joined Z pair.
ZxDiagram from_circuit(const Circuit& c);

/// The four graph-like conditions, checked independently.
struct GraphLikeCertificate {
  bool all_z = false;
  bool hadamard_edges_only = false;  // between spiders
  bool no_parallel_or_self_loops = false;
  bool boundary_conditions = false;

  bool ok() const {
    return all_z && hadamard_edges_only && no_parallel_or_self_loops &&
           boundary_conditions;
  }
};

GraphLikeCertificate certify_graph_like(const ZxDiagram& d);
bool is_graph_like(const ZxDiagram& d);

/// Rewrites the diagram into graph-like form: color change on X spiders,
/// fusion along simple edges, Hopf cancellation of parallel Hadamard pairs,
/// self-loop elimination, and identity-spider insertion where the boundary
/// conditions are violated. Semantics preserved up to scalar.
ZxDiagram to_graph_like(const ZxDiagram& d);
ZxDiagram to_graph_like(const ZxDiagram& d, std::vector<RewriteStep>* trace,
                        std::uint64_t* step_counter);

/// G * u: complements the Hadamard adjacency among the spider neighbors of
/// u. Pure graph operation; phases untouched. Throws std::invalid_argument
/// if u is absent or a boundary.
ZxDiagram local_complement_graph(const ZxDiagram& d, VertexId u);

/// G ^ uv = G * u * v * u, for Hadamard-adjacent non-boundary u, v.
ZxDiagram pivot_graph(const ZxDiagram& d, VertexId u, VertexId v);

struct GraphStats {
  int edge_count = 0;
  double density = 0.0;
  double centrality = 0.0;  // mean vertex betweenness over spiders
};

/// Spider-graph statistics: edge count, density 2E/(V(V-1)) and mean vertex
/// betweenness, all over non-boundary vertices.
GraphStats graph_stats(const ZxDiagram& d);

/// Betweenness centrality of every spider (Brandes, unordered pairs).
std::map<VertexId, double> spider_betweenness(const ZxDiagram& d);

/// Betweenness of spider-spider edges, keyed by (min, max) id pair.
std::map<std::pair<VertexId, VertexId>, double> edge_betweenness(
    const ZxDiagram& d);

}  // namespace zxopt
