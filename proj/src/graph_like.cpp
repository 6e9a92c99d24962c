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

#include "zxopt/graph_like.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace zxopt {

namespace {

void log_step(std::vector<RewriteStep>* trace, std::uint64_t* ctr,
              RuleKind rule, std::vector<VertexId> subjects) {
  if (!trace) return;
  trace->push_back({rule, std::move(subjects), ctr ? (*ctr)++ : 0});
}

EdgeType toggled(EdgeType t) {
  return t == EdgeType::Simple ? EdgeType::Hadamard : EdgeType::Simple;
}

// Fuses `gone` into `keep` along (at least one) connecting simple edge.
// Extra parallel edges become self-loops of `keep`: simple ones vanish,
// Hadamard ones add pi. Moved edges merge with existing ones; parallel
// Hadamard pairs cancel (Hopf) and duplicate simple edges between Z spiders
// collapse to one.
void fuse_into(ZxDiagram& d, VertexId keep, VertexId gone,
               std::vector<RewriteStep>* trace, std::uint64_t* ctr) {
  log_step(trace, ctr, RuleKind::Fusion, {keep, gone});
  d.add_phase(keep, d.phase(gone));

  const EdgeData between = d.edge_between(keep, gone);
  for (int i = 0; i < between.hadamard; ++i) d.add_phase(keep, Phase::pi());
  d.remove_all_edges(keep, gone);

  const EdgeData own_loops = d.self_loops(gone);
  for (int i = 0; i < own_loops.hadamard; ++i)
    d.add_phase(keep, Phase::pi());
  d.remove_all_edges(gone, gone);

  for (VertexId w : d.neighbors(gone)) {
    const EdgeData e = d.edge_between(gone, w);
    const EdgeData existing = d.edge_between(keep, w);
    // Simple edges between Z spiders are idempotent; duplicated Hadamard
    // edges cancel pairwise.
    int simple = existing.simple + e.simple;
    if (!d.is_boundary(w) && simple > 1) simple = 1;
    int hadamard = existing.hadamard + e.hadamard;
    if (!d.is_boundary(w)) {
      if (hadamard >= 2)
        log_step(trace, ctr, RuleKind::Hopf, {keep, w});
      hadamard %= 2;
    }
    d.remove_all_edges(keep, w);
    for (int i = 0; i < simple; ++i) d.add_edge(keep, w, EdgeType::Simple);
    for (int i = 0; i < hadamard; ++i)
      d.add_edge(keep, w, EdgeType::Hadamard);
  }
  d.remove_vertex(gone);
}

// One pass of local resolution: self-loops, parallel Hadamard pairs, then
// one fusion. Returns true when something fired.
bool resolve_once(ZxDiagram& d, std::vector<RewriteStep>* trace,
                  std::uint64_t* ctr) {
  for (VertexId v : d.spider_ids()) {
    const EdgeData loops = d.self_loops(v);
    if (loops.total() == 0) continue;
    for (int i = 0; i < loops.hadamard; ++i) d.add_phase(v, Phase::pi());
    if (loops.simple) log_step(trace, ctr, RuleKind::Fusion, {v});
    if (loops.hadamard) log_step(trace, ctr, RuleKind::Hopf, {v});
    d.remove_all_edges(v, v);
    return true;
  }
  for (const auto& [a, b] : d.edge_pairs()) {
    if (a == b || d.is_boundary(a) || d.is_boundary(b)) continue;
    const EdgeData e = d.edge_between(a, b);
    if (e.hadamard >= 2) {
      const int pairs = e.hadamard / 2;
      for (int i = 0; i < 2 * pairs; ++i)
        d.remove_edge(a, b, EdgeType::Hadamard);
      log_step(trace, ctr, RuleKind::Hopf, {a, b});
      return true;
    }
  }
  for (const auto& [a, b] : d.edge_pairs()) {
    if (a == b || d.is_boundary(a) || d.is_boundary(b)) continue;
    if (d.edge_between(a, b).simple > 0) {
      fuse_into(d, a, b, trace, ctr);
      return true;
    }
  }
  return false;
}

// io rank for deterministic choice of which boundary a multi-io spider
// keeps: inputs before outputs, list order within.
std::map<VertexId, int> io_ranks(const ZxDiagram& d) {
  std::map<VertexId, int> rank;
  int r = 0;
  for (VertexId v : d.inputs()) rank[v] = r++;
  for (VertexId v : d.outputs()) rank[v] = r++;
  return rank;
}

// Replaces the boundary edge b--t by b -S- z1 -H- z2 -t' with t' the
// toggled edge type; the two fresh zero spiders keep the wire semantics
// while giving b a dedicated spider.
void repair_boundary_edge(ZxDiagram& d, VertexId b, VertexId t, EdgeType tau,
                          std::vector<RewriteStep>* trace,
                          std::uint64_t* ctr) {
  d.remove_edge(b, t, tau);
  const VertexId z1 = d.add_vertex(VertexKind::Z);
  const VertexId z2 = d.add_vertex(VertexKind::Z);
  d.add_edge(b, z1, EdgeType::Simple);
  d.add_edge(z1, z2, EdgeType::Hadamard);
  d.add_edge(z2, t, toggled(tau));
  log_step(trace, ctr, RuleKind::Identity, {z1, z2});
}

// One round of boundary-condition repair. Returns true if any edge was
// rewired (callers must rerun local resolution afterwards).
bool repair_boundaries(ZxDiagram& d, std::vector<RewriteStep>* trace,
                       std::uint64_t* ctr) {
  const std::map<VertexId, int> rank = io_ranks(d);
  bool changed = false;

  std::vector<VertexId> io_order = d.inputs();
  io_order.insert(io_order.end(), d.outputs().begin(), d.outputs().end());

  std::set<VertexId> handled;
  for (VertexId b : io_order) {
    if (handled.count(b)) continue;
    const auto nbrs = d.neighbors(b);
    if (nbrs.size() != 1)
      throw std::logic_error("boundary vertex without unique wire");
    const VertexId t = nbrs.front();
    const EdgeData e = d.edge_between(b, t);
    const EdgeType tau =
        e.simple > 0 ? EdgeType::Simple : EdgeType::Hadamard;
    if (d.is_boundary(t)) {
      repair_boundary_edge(d, b, t, tau, trace, ctr);
      handled.insert(t);
      changed = true;
    }
  }

  for (VertexId s : d.spider_ids()) {
    std::vector<VertexId> ios = d.boundary_neighbors(s);
    if (ios.size() <= 1) continue;
    std::sort(ios.begin(), ios.end(), [&](VertexId a, VertexId b) {
      return rank.at(a) < rank.at(b);
    });
    for (std::size_t i = 1; i < ios.size(); ++i) {
      const EdgeData e = d.edge_between(ios[i], s);
      const EdgeType tau =
          e.simple > 0 ? EdgeType::Simple : EdgeType::Hadamard;
      repair_boundary_edge(d, ios[i], s, tau, trace, ctr);
    }
    changed = true;
  }
  return changed;
}

void normalize_in_place(ZxDiagram& d, std::vector<RewriteStep>* trace,
                        std::uint64_t* ctr) {
  for (VertexId v : d.vertex_ids()) {
    if (d.kind(v) != VertexKind::X) continue;
    for (VertexId w : d.neighbors(v)) {
      const EdgeData e = d.edge_between(v, w);
      d.remove_all_edges(v, w);
      for (int i = 0; i < e.hadamard; ++i)
        d.add_edge(v, w, EdgeType::Simple);
      for (int i = 0; i < e.simple; ++i)
        d.add_edge(v, w, EdgeType::Hadamard);
    }
    // A self-loop picks up H on both ends, which cancels.
    d.set_kind(v, VertexKind::Z);
    log_step(trace, ctr, RuleKind::ColorChange, {v});
  }

  while (true) {
    while (resolve_once(d, trace, ctr)) {
    }
    if (!repair_boundaries(d, trace, ctr)) break;
  }
}

}  // namespace

ZxDiagram from_circuit(const Circuit& c) {
  c.validate();
  ZxDiagram d;
  const int n = c.n_qubits;
  std::vector<VertexId> ins, outs, cur(n);
  std::vector<EdgeType> pend(n, EdgeType::Simple);

  for (int q = 0; q < n; ++q) {
    const VertexId b = d.add_vertex(VertexKind::Boundary);
    ins.push_back(b);
    cur[q] = b;
  }

  auto attach = [&](int q, VertexId v) {
    d.add_edge(cur[q], v, pend[q]);
    cur[q] = v;
    pend[q] = EdgeType::Simple;
  };

  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        pend[g.q0] = toggled(pend[g.q0]);
        break;
      case GateKind::ZPhase:
        attach(g.q0, d.add_vertex(VertexKind::Z, g.phase));
        break;
      case GateKind::XPhase:
        attach(g.q0, d.add_vertex(VertexKind::X, g.phase));
        break;
      case GateKind::Cnot: {
        const VertexId vc = d.add_vertex(VertexKind::Z);
        const VertexId vt = d.add_vertex(VertexKind::X);
        attach(g.q0, vc);
        attach(g.q1, vt);
        d.add_edge(vc, vt, EdgeType::Simple);
        break;
      }
      case GateKind::Cz: {
        const VertexId v1 = d.add_vertex(VertexKind::Z);
        const VertexId v2 = d.add_vertex(VertexKind::Z);
        attach(g.q0, v1);
        attach(g.q1, v2);
        d.add_edge(v1, v2, EdgeType::Hadamard);
        break;
      }
    }
  }

  for (int q = 0; q < n; ++q) {
    const VertexId b = d.add_vertex(VertexKind::Boundary);
    outs.push_back(b);
    d.add_edge(cur[q], b, pend[q]);
  }
  d.set_io(std::move(ins), std::move(outs));
  return d;
}

GraphLikeCertificate certify_graph_like(const ZxDiagram& d) {
  GraphLikeCertificate c;
  c.all_z = true;
  c.hadamard_edges_only = true;
  c.no_parallel_or_self_loops = true;
  c.boundary_conditions = true;

  for (VertexId v : d.vertex_ids())
    if (d.kind(v) == VertexKind::X) c.all_z = false;

  for (const auto& [a, b] : d.edge_pairs()) {
    const EdgeData e = d.edge_between(a, b);
    if (a == b) {
      c.no_parallel_or_self_loops = false;
      continue;
    }
    if (e.hadamard > 1 || e.total() > 1)
      c.no_parallel_or_self_loops = false;
    if (!d.is_boundary(a) && !d.is_boundary(b) && e.simple > 0)
      c.hadamard_edges_only = false;
  }

  std::set<VertexId> io(d.inputs().begin(), d.inputs().end());
  io.insert(d.outputs().begin(), d.outputs().end());
  for (VertexId b : io) {
    if (!d.has_vertex(b) || !d.is_boundary(b) || d.degree(b) != 1) {
      c.boundary_conditions = false;
      continue;
    }
    const VertexId t = d.neighbors(b).front();
    if (d.is_boundary(t) || d.kind(t) == VertexKind::X)
      c.boundary_conditions = false;
  }
  for (VertexId s : d.spider_ids())
    if (d.boundary_neighbors(s).size() > 1) c.boundary_conditions = false;
  if (io.size() != d.inputs().size() + d.outputs().size())
    c.boundary_conditions = false;
  for (VertexId v : d.vertex_ids())
    if (d.is_boundary(v) && !io.count(v)) c.boundary_conditions = false;

  return c;
}

bool is_graph_like(const ZxDiagram& d) { return certify_graph_like(d).ok(); }

ZxDiagram to_graph_like(const ZxDiagram& d) {
  return to_graph_like(d, nullptr, nullptr);
}

ZxDiagram to_graph_like(const ZxDiagram& d, std::vector<RewriteStep>* trace,
                        std::uint64_t* step_counter) {
  ZxDiagram out = d;
  normalize_in_place(out, trace, step_counter);
  return out;
}

ZxDiagram local_complement_graph(const ZxDiagram& d, VertexId u) {
  if (!d.has_vertex(u))
    throw std::invalid_argument("local complement: no such vertex");
  if (d.is_boundary(u))
    throw std::invalid_argument("local complement: boundary subject");
  ZxDiagram out = d;
  const std::vector<VertexId> nbrs = out.spider_neighbors(u);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      out.toggle_hadamard_edge(nbrs[i], nbrs[j]);
  return out;
}

ZxDiagram pivot_graph(const ZxDiagram& d, VertexId u, VertexId v) {
  if (!d.has_vertex(u) || !d.has_vertex(v) || d.is_boundary(u) ||
      d.is_boundary(v))
    throw std::invalid_argument("pivot: subjects must be spiders");
  if (d.edge_between(u, v).hadamard == 0)
    throw std::invalid_argument("pivot: subjects must be Hadamard-adjacent");
  return local_complement_graph(
      local_complement_graph(local_complement_graph(d, u), v), u);
}

std::map<VertexId, double> spider_betweenness(const ZxDiagram& d) {
  const std::vector<VertexId> verts = d.spider_ids();
  std::map<VertexId, double> bc;
  for (VertexId v : verts) bc[v] = 0.0;

  for (VertexId s : verts) {
    std::vector<VertexId> order;
    std::map<VertexId, std::vector<VertexId>> pred;
    std::map<VertexId, double> sigma;
    std::map<VertexId, int> dist;
    for (VertexId v : verts) {
      sigma[v] = 0.0;
      dist[v] = -1;
    }
    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (VertexId w : d.spider_neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          pred[w].push_back(v);
        }
      }
    }
    std::map<VertexId, double> delta;
    for (VertexId v : order) delta[v] = 0.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId w = *it;
      for (VertexId v : pred[w])
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  for (auto& [v, val] : bc) val /= 2.0;  // unordered pairs
  return bc;
}

std::map<std::pair<VertexId, VertexId>, double> edge_betweenness(
    const ZxDiagram& d) {
  const std::vector<VertexId> verts = d.spider_ids();
  std::map<std::pair<VertexId, VertexId>, double> eb;
  for (const auto& [a, b] : d.edge_pairs())
    if (a != b && !d.is_boundary(a) && !d.is_boundary(b))
      eb[{a, b}] = 0.0;

  for (VertexId s : verts) {
    std::vector<VertexId> order;
    std::map<VertexId, std::vector<VertexId>> pred;
    std::map<VertexId, double> sigma;
    std::map<VertexId, int> dist;
    for (VertexId v : verts) {
      sigma[v] = 0.0;
      dist[v] = -1;
    }
    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (VertexId w : d.spider_neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          pred[w].push_back(v);
        }
      }
    }
    std::map<VertexId, double> delta;
    for (VertexId v : order) delta[v] = 0.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId w = *it;
      for (VertexId v : pred[w]) {
        const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        delta[v] += c;
        eb[{std::min(v, w), std::max(v, w)}] += c;
      }
    }
  }
  for (auto& [e, val] : eb) val /= 2.0;
  return eb;
}

GraphStats graph_stats(const ZxDiagram& d) {
  GraphStats s;
  const std::vector<VertexId> verts = d.spider_ids();
  const auto n = static_cast<double>(verts.size());
  for (const auto& [a, b] : d.edge_pairs())
    if (a != b && !d.is_boundary(a) && !d.is_boundary(b)) ++s.edge_count;
  if (verts.size() >= 2)
    s.density = 2.0 * s.edge_count / (n * (n - 1.0));
  if (!verts.empty()) {
    double total = 0.0;
    for (const auto& [v, val] : spider_betweenness(d)) total += val;
    s.centrality = total / n;
  }
  return s;
}

}  // namespace zxopt
