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

#include "zxopt/extract.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace zxopt {

namespace {

/// Working state: gates are collected output-side first and reversed at the
/// end. `frontier[q]` is the rightmost not-yet-extracted spider of wire q,
/// or kNone once the wire has been traced through to an input.
constexpr VertexId kNone = static_cast<VertexId>(-1);

struct Extractor {
  ZxDiagram g;
  int n = 0;
  std::vector<Gate> rev;                 // reversed gate order
  std::vector<VertexId> frontier;
  std::vector<int> wire_source;          // input index feeding wire q

  explicit Extractor(const ZxDiagram& d) : g(d) {}

  void emit_h(int q) { rev.push_back(Gate::h(q)); }
  void emit_phase(int q, Phase p) { rev.push_back(Gate::z_phase(q, p)); }
  void emit_cz(int a, int b) { rev.push_back(Gate::cz(a, b)); }
  void emit_cnot(int control, int target) {
    rev.push_back(Gate::cnot(control, target));
  }

  EdgeType edge_type(VertexId a, VertexId b) const {
    const EdgeData e = g.edge_between(a, b);
    if (e.total() != 1)
      throw ExtractionStuck("unnormalized edge between " + std::to_string(a) +
                            " and " + std::to_string(b));
    return e.simple ? EdgeType::Simple : EdgeType::Hadamard;
  }

  void drop_scalar_components() {
    std::set<VertexId> reach;
    std::deque<VertexId> queue;
    for (VertexId b : g.inputs()) queue.push_back(b);
    for (VertexId b : g.outputs()) queue.push_back(b);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      if (!reach.insert(v).second) continue;
      for (VertexId w : g.neighbors(v)) queue.push_back(w);
    }
    for (VertexId v : g.vertex_ids())
      if (!reach.count(v)) g.remove_vertex(v);
  }

  // Inserts identity spiders on the wire of input `b` so its spider
  // neighbor is freed from the boundary. Keeps the wire semantics.
  void detach_input(VertexId b) {
    const VertexId t = g.neighbors(b).front();
    const EdgeType tau = edge_type(b, t);
    if (tau == EdgeType::Hadamard) {
      g.remove_edge(b, t, tau);
      const VertexId z = g.add_vertex(VertexKind::Z);
      g.add_edge(b, z, EdgeType::Simple);
      g.add_edge(z, t, EdgeType::Hadamard);
    } else {
      g.remove_edge(b, t, tau);
      const VertexId z1 = g.add_vertex(VertexKind::Z);
      const VertexId z2 = g.add_vertex(VertexKind::Z);
      g.add_edge(b, z1, EdgeType::Simple);
      g.add_edge(z1, z2, EdgeType::Hadamard);
      g.add_edge(z2, t, EdgeType::Hadamard);
    }
  }

  bool is_input(VertexId v) const {
    return std::find(g.inputs().begin(), g.inputs().end(), v) !=
           g.inputs().end();
  }

  void init_frontier() {
    frontier.assign(static_cast<std::size_t>(n), kNone);
    wire_source.assign(static_cast<std::size_t>(n), -1);
    for (int q = 0; q < n; ++q) {
      const VertexId out = g.outputs()[static_cast<std::size_t>(q)];
      if (g.neighbors(out).size() != 1)
        throw ExtractionStuck("output wire " + std::to_string(q) +
                              " has no unique neighbor");
      const VertexId t = g.neighbors(out).front();
      if (g.is_boundary(t)) {
        // Bare wire straight to an input.
        if (edge_type(out, t) == EdgeType::Hadamard) emit_h(q);
        auto it = std::find(g.inputs().begin(), g.inputs().end(), t);
        if (it == g.inputs().end())
          throw ExtractionStuck("output wired to a non-input boundary");
        wire_source[static_cast<std::size_t>(q)] =
            static_cast<int>(it - g.inputs().begin());
        g.remove_edge(out, t, g.edge_between(out, t).simple
                                  ? EdgeType::Simple
                                  : EdgeType::Hadamard);
        continue;
      }
      if (edge_type(out, t) == EdgeType::Hadamard) {
        emit_h(q);
        g.remove_edge(out, t, EdgeType::Hadamard);
        g.add_edge(out, t, EdgeType::Simple);
      }
      for (int p = 0; p < q; ++p)
        if (frontier[static_cast<std::size_t>(p)] == t)
          throw ExtractionStuck("two outputs share a spider");
      frontier[static_cast<std::size_t>(q)] = t;
    }
  }

  void clear_phases_and_czs() {
    for (int q = 0; q < n; ++q) {
      const VertexId f = frontier[static_cast<std::size_t>(q)];
      if (f == kNone) continue;
      if (!g.phase(f).is_zero()) {
        emit_phase(q, g.phase(f));
        g.set_phase(f, Phase());
      }
    }
    for (int a = 0; a < n; ++a) {
      const VertexId fa = frontier[static_cast<std::size_t>(a)];
      if (fa == kNone) continue;
      for (int b = a + 1; b < n; ++b) {
        const VertexId fb = frontier[static_cast<std::size_t>(b)];
        if (fb == kNone) continue;
        const EdgeData e = g.edge_between(fa, fb);
        if (e.hadamard > 0) {
          emit_cz(a, b);
          g.remove_edge(fa, fb, EdgeType::Hadamard);
        }
      }
    }
  }

  // Moves the frontier of wire q from f to its unique spider neighbor.
  void advance(int q, VertexId w) {
    const VertexId f = frontier[static_cast<std::size_t>(q)];
    const VertexId out = g.outputs()[static_cast<std::size_t>(q)];
    emit_h(q);  // the consumed spider-spider edge is a Hadamard edge
    g.remove_vertex(f);
    g.add_edge(out, w, EdgeType::Simple);
    frontier[static_cast<std::size_t>(q)] = w;
  }

  // Wire q is done: its frontier spider touches only its input.
  void finish_wire(int q) {
    const VertexId f = frontier[static_cast<std::size_t>(q)];
    const auto ins = g.boundary_neighbors(f);
    if (ins.size() != 1)
      throw ExtractionStuck("wire " + std::to_string(q) +
                            " ends without a unique input");
    const VertexId b = ins.front();
    if (!is_input(b))
      throw ExtractionStuck("wire " + std::to_string(q) +
                            " terminates on a non-input boundary");
    if (edge_type(f, b) == EdgeType::Hadamard) emit_h(q);
    auto it = std::find(g.inputs().begin(), g.inputs().end(), b);
    wire_source[static_cast<std::size_t>(q)] =
        static_cast<int>(it - g.inputs().begin());
    g.remove_vertex(f);
    frontier[static_cast<std::size_t>(q)] = kNone;
  }

  // GF(2) Gaussian elimination to reduced row echelon form. Row additions
  // are reported through `row_op` (target ^= source).
  template <typename RowOp>
  static void gauss(std::vector<std::vector<int>>& m, RowOp row_op) {
    if (m.empty()) return;
    const std::size_t cols = m.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
      std::size_t pr = pivot_row;
      while (pr < m.size() && m[pr][col] == 0) ++pr;
      if (pr == m.size()) continue;
      if (pr != pivot_row) {
        // Realize the swap as three additions to stay within row ops.
        row_op(pivot_row, pr);
        for (std::size_t c = 0; c < cols; ++c)
          m[pivot_row][c] ^= m[pr][c];
        row_op(pr, pivot_row);
        for (std::size_t c = 0; c < cols; ++c)
          m[pr][c] ^= m[pivot_row][c];
        row_op(pivot_row, pr);
        for (std::size_t c = 0; c < cols; ++c)
          m[pivot_row][c] ^= m[pr][c];
      }
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r != pivot_row && m[r][col] == 1) {
          row_op(r, pivot_row);
          for (std::size_t c = 0; c < cols; ++c)
            m[r][c] ^= m[pivot_row][c];
        }
      }
      ++pivot_row;
    }
  }

  // One unit-row advancement sweep. Returns true if some wire advanced.
  bool advance_unit_rows() {
    bool any = false;
    std::set<VertexId> claimed;
    for (int q = 0; q < n; ++q) {
      const VertexId f = frontier[static_cast<std::size_t>(q)];
      if (f == kNone) continue;
      if (!g.phase(f).is_zero()) continue;  // cleared next loop round
      const auto nbrs = g.spider_neighbors(f);
      if (nbrs.size() != 1) continue;
      if (!g.boundary_neighbors(f).empty()) continue;  // holds an input
      const VertexId w = nbrs.front();
      if (claimed.count(w)) continue;
      bool w_is_frontier = false;
      for (int p = 0; p < n; ++p)
        if (frontier[static_cast<std::size_t>(p)] == w) w_is_frontier = true;
      if (w_is_frontier) continue;
      claimed.insert(w);
      advance(q, w);
      any = true;
    }
    return any;
  }

  // Gauss step over the frontier/neighbor biadjacency. Emitting
  // CNOT(control=q_i, target=q_j) realizes row_i ^= row_j: the control
  // spider's neighborhood picks up the target spider's.
  bool eliminate() {
    std::vector<int> rows;  // qubits with live frontier vertices
    std::set<VertexId> nbr_set;
    for (int q = 0; q < n; ++q) {
      const VertexId f = frontier[static_cast<std::size_t>(q)];
      if (f == kNone) continue;
      rows.push_back(q);
      for (VertexId w : g.spider_neighbors(f)) nbr_set.insert(w);
    }
    if (nbr_set.empty()) return false;

    // Row additions copy the source row's whole neighborhood, so a source
    // frontier vertex must not hold an input wire. Only rows with spider
    // neighbors can ever serve as sources; wires already parked on their
    // input are left alone.
    bool detached = false;
    for (int q : rows) {
      const VertexId f = frontier[static_cast<std::size_t>(q)];
      if (g.spider_neighbors(f).empty()) continue;
      for (VertexId b : g.boundary_neighbors(f)) {
        detach_input(b);
        detached = true;
      }
    }
    if (detached) return true;  // fresh spiders joined the neighbor set

    const std::vector<VertexId> cols(nbr_set.begin(), nbr_set.end());
    std::map<VertexId, std::size_t> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

    std::vector<std::vector<int>> m(rows.size(),
                                    std::vector<int>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const VertexId f = frontier[static_cast<std::size_t>(rows[r])];
      for (VertexId w : g.spider_neighbors(f)) m[r][col_of[w]] = 1;
    }

    std::vector<std::pair<std::size_t, std::size_t>> ops;
    gauss(m, [&](std::size_t target, std::size_t source) {
      ops.emplace_back(target, source);
    });
    if (ops.empty()) return false;

    for (const auto& [target, source] : ops)
      emit_cnot(rows[target], rows[source]);

    // Re-wire the diagram to match the eliminated matrix.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const VertexId f = frontier[static_cast<std::size_t>(rows[r])];
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const bool want = m[r][c] == 1;
        const bool have = g.edge_between(f, cols[c]).hadamard > 0;
        if (want != have) g.toggle_hadamard_edge(f, cols[c]);
      }
    }
    return true;
  }

  // Emits the final wire permutation as swaps (three CNOTs each), placed
  // before everything already extracted.
  void emit_permutation() {
    std::vector<int> perm(wire_source.begin(), wire_source.end());
    for (int q = 0; q < n; ++q) {
      if (perm[static_cast<std::size_t>(q)] < 0)
        throw ExtractionStuck("wire " + std::to_string(q) +
                              " has no input source");
    }
    for (int q = 0; q < n; ++q) {
      while (perm[static_cast<std::size_t>(q)] != q) {
        const int r = perm[static_cast<std::size_t>(q)];
        // swap wires q and r
        emit_cnot(q, r);
        emit_cnot(r, q);
        emit_cnot(q, r);
        std::swap(perm[static_cast<std::size_t>(q)],
                  perm[static_cast<std::size_t>(r)]);
      }
    }
  }

  Circuit run() {
    if (g.inputs().size() != g.outputs().size())
      throw ExtractionStuck("diagram is not square (inputs != outputs)");
    n = static_cast<int>(g.outputs().size());
    drop_scalar_components();
    init_frontier();

    while (true) {
      clear_phases_and_czs();

      bool live = false;
      bool pending = false;
      for (int q = 0; q < n; ++q) {
        const VertexId f = frontier[static_cast<std::size_t>(q)];
        if (f == kNone) continue;
        live = true;
        if (!g.spider_neighbors(f).empty()) pending = true;
      }
      if (!live) break;
      if (!pending) {
        for (int q = 0; q < n; ++q)
          if (frontier[static_cast<std::size_t>(q)] != kNone) finish_wire(q);
        break;
      }

      if (advance_unit_rows()) continue;
      if (eliminate()) continue;

      std::string detail = "frontier:";
      for (int q = 0; q < n; ++q)
        detail += " " +
                  (frontier[static_cast<std::size_t>(q)] == kNone
                       ? std::string("-")
                       : std::to_string(frontier[static_cast<std::size_t>(q)]));
      throw ExtractionStuck(detail);
    }

    // Any spider still present is unreachable from the trace, which means
    // the diagram did not describe a circuit.
    if (g.num_spiders() != 0)
      throw ExtractionStuck("leftover spiders after frontier pass");

    emit_permutation();
    Circuit c(n);
    c.gates.assign(rev.rbegin(), rev.rend());
    return c;
  }
};

}  // namespace

Circuit extract_circuit(const ZxDiagram& d) {
  Extractor ex(d);
  return ex.run();
}

ExtractionReport extraction_report(const ZxDiagram& d) {
  const Circuit c = extract_circuit(d);
  ExtractionReport r;
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot: ++r.cnot_count; break;
      case GateKind::Cz: ++r.cz_count; break;
      case GateKind::H: ++r.h_count; break;
      case GateKind::ZPhase: ++r.phase_count; break;
      default: break;
    }
  }
  return r;
}

}  // namespace zxopt
