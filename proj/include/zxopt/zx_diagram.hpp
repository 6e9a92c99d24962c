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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxopt/phase.hpp"

namespace zxopt {

using VertexId = std::uint32_t;

enum class VertexKind { Boundary, Z, X };
enum class EdgeType { Simple, Hadamard };

struct VertexData {
  VertexKind kind = VertexKind::Z;
  Phase phase;
};

/// Edge multiplicities between one vertex pair. Normalized diagrams carry a
/// single edge per connected pair; raw diagrams (hand-built or mid-rewrite)
/// may hold parallel and mixed pairs until normalization resolves them.
struct EdgeData {
  int simple = 0;
  int hadamard = 0;
  int total() const { return simple + hadamard; }
  bool operator==(const EdgeData&) const = default;
};

/// An open ZX-diagram: phase-labelled Z/X spiders and degree-1 boundary
/// vertices, joined by simple or Hadamard wires, with ordered input and
/// output lists. Value-semantic; rewrites copy or mutate an exclusively
/// owned instance.
class ZxDiagram {
 public:
  VertexId add_vertex(VertexKind kind, Phase phase = Phase());

  /// Adds one edge instance (a == b makes a self-loop).
  void add_edge(VertexId a, VertexId b, EdgeType type);
  void remove_edge(VertexId a, VertexId b, EdgeType type);
  void remove_all_edges(VertexId a, VertexId b);
  /// Flips the existence of the Hadamard edge a-b; used by the
  /// complementation rewrites, whose subjects never carry simple edges.
  void toggle_hadamard_edge(VertexId a, VertexId b);

  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  const VertexData& vertex(VertexId v) const;
  VertexKind kind(VertexId v) const { return vertex(v).kind; }
  const Phase& phase(VertexId v) const { return vertex(v).phase; }
  void set_phase(VertexId v, Phase p);
  void add_phase(VertexId v, Phase p);
  void set_kind(VertexId v, VertexKind k);
  bool is_boundary(VertexId v) const {
    return kind(v) == VertexKind::Boundary;
  }

  EdgeData edge_between(VertexId a, VertexId b) const;
  bool connected(VertexId a, VertexId b) const {
    return edge_between(a, b).total() > 0;
  }

  /// Neighbor ids in ascending order (self excluded even with a self-loop).
  std::vector<VertexId> neighbors(VertexId v) const;
  /// Non-boundary neighbors in ascending order.
  std::vector<VertexId> spider_neighbors(VertexId v) const;
  /// Boundary neighbors in ascending order.
  std::vector<VertexId> boundary_neighbors(VertexId v) const;
  /// Total incident edge instances; self-loops count twice.
  int degree(VertexId v) const;
  EdgeData self_loops(VertexId v) const;

  std::vector<VertexId> vertex_ids() const;
  std::vector<VertexId> spider_ids() const;
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_spiders() const;
  /// Distinct connected vertex pairs (a < b), plus self-loop entries.
  std::vector<std::pair<VertexId, VertexId>> edge_pairs() const;
  std::size_t num_edge_instances() const;

  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  void add_input(VertexId v);
  void add_output(VertexId v);
  void set_io(std::vector<VertexId> ins, std::vector<VertexId> outs);

  /// Structural well-formedness: existing endpoints, degree-1 boundary
  /// vertices each registered as exactly one input or output, io lists
  /// referencing boundary vertices. Throws std::logic_error on violation.
  void check_invariants() const;

  std::string to_json() const;
  static ZxDiagram from_json(const std::string& text);

  bool operator==(const ZxDiagram&) const = default;

 private:
  std::map<VertexId, VertexData> vertices_;
  // Symmetric adjacency; a self-loop is stored once under (v, v).
  std::map<VertexId, std::map<VertexId, EdgeData>> adj_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  VertexId next_id_ = 0;
};

}  // namespace zxopt
