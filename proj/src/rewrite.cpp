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

#include "zxopt/rewrite.hpp"

#include <algorithm>
#include <set>

namespace zxopt {

namespace {

bool is_interior(const ZxDiagram& d, VertexId v) {
  return !d.is_boundary(v) && d.boundary_neighbors(v).empty();
}

void complement_pairs(ZxDiagram& d, const std::vector<VertexId>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      d.toggle_hadamard_edge(verts[i], verts[j]);
}

void complement_between(ZxDiagram& d, const std::vector<VertexId>& xs,
                        const std::vector<VertexId>& ys) {
  for (VertexId a : xs)
    for (VertexId b : ys) d.toggle_hadamard_edge(a, b);
}

// The three neighborhood classes of an adjacent pair: common, exclusive to
// u, exclusive to v.
struct PivotClasses {
  std::vector<VertexId> common, only_u, only_v;
};

PivotClasses pivot_classes(const ZxDiagram& d, VertexId u, VertexId v) {
  PivotClasses cls;
  const std::vector<VertexId> nu = d.spider_neighbors(u);
  const std::vector<VertexId> nv = d.spider_neighbors(v);
  const std::set<VertexId> su(nu.begin(), nu.end());
  const std::set<VertexId> sv(nv.begin(), nv.end());
  for (VertexId w : nu) {
    if (w == v) continue;
    (sv.count(w) ? cls.common : cls.only_u).push_back(w);
  }
  for (VertexId w : nv) {
    if (w == u || su.count(w)) continue;
    cls.only_v.push_back(w);
  }
  return cls;
}

void check_lc_simp_pre(const ZxDiagram& d, VertexId u) {
  if (!d.has_vertex(u) || d.is_boundary(u))
    throw RewriteError("lc_simp: subject must be a spider");
  if (!is_interior(d, u))
    throw RewriteError("lc_simp: subject must not touch a boundary wire");
  if (!d.phase(u).is_proper_clifford())
    throw RewriteError("lc_simp: subject phase must be +-pi/2");
}

void check_pivot_simp_pre(const ZxDiagram& d, VertexId u, VertexId v) {
  if (!d.has_vertex(u) || !d.has_vertex(v) || d.is_boundary(u) ||
      d.is_boundary(v) || u == v)
    throw RewriteError("pivot_simp: subjects must be distinct spiders");
  if (d.edge_between(u, v).hadamard == 0)
    throw RewriteError("pivot_simp: subjects must be Hadamard-adjacent");
  if (!is_interior(d, u) || !is_interior(d, v))
    throw RewriteError("pivot_simp: subjects must be interior");
  if (!d.phase(u).is_pauli() || !d.phase(v).is_pauli())
    throw RewriteError("pivot_simp: subject phases must be 0 or pi");
}

void lc_simp_in_place(ZxDiagram& d, VertexId u) {
  const Phase pu = d.phase(u);
  const std::vector<VertexId> nbrs = d.spider_neighbors(u);
  complement_pairs(d, nbrs);
  for (VertexId w : nbrs) d.add_phase(w, -pu);
  d.remove_vertex(u);
}

void pivot_simp_in_place(ZxDiagram& d, VertexId u, VertexId v) {
  const Phase pu = d.phase(u);
  const Phase pv = d.phase(v);
  const PivotClasses cls = pivot_classes(d, u, v);
  complement_between(d, cls.common, cls.only_u);
  complement_between(d, cls.common, cls.only_v);
  complement_between(d, cls.only_u, cls.only_v);
  for (VertexId w : cls.only_u) d.add_phase(w, pv);
  for (VertexId w : cls.only_v) d.add_phase(w, pu);
  for (VertexId w : cls.common) d.add_phase(w, pu + pv + Phase::pi());
  d.remove_vertex(u);
  d.remove_vertex(v);
}

// Interior zero-phase spider with exactly two spider wires: drop it and
// join its neighbors with the composed edge type.
bool try_remove_identity(ZxDiagram& d, VertexId z,
                         std::vector<RewriteStep>& trace,
                         std::uint64_t& ctr) {
  if (!is_interior(d, z) || !d.phase(z).is_zero()) return false;
  if (d.degree(z) != 2 || d.self_loops(z).total() != 0) return false;
  const std::vector<VertexId> nbrs = d.neighbors(z);
  if (nbrs.size() != 2) return false;

  const EdgeData e0 = d.edge_between(z, nbrs[0]);
  const EdgeData e1 = d.edge_between(z, nbrs[1]);
  const bool had = (e0.hadamard > 0) != (e1.hadamard > 0);
  d.remove_vertex(z);
  d.add_edge(nbrs[0], nbrs[1],
             had ? EdgeType::Hadamard : EdgeType::Simple);
  trace.push_back({RuleKind::Identity, {z, nbrs[0], nbrs[1]}, ctr++});
  return true;
}

bool lc_simp_eligible(const ZxDiagram& d, VertexId u) {
  return !d.is_boundary(u) && is_interior(d, u) &&
         d.phase(u).is_proper_clifford();
}

bool pivot_simp_eligible(const ZxDiagram& d, VertexId u, VertexId v) {
  return !d.is_boundary(u) && !d.is_boundary(v) &&
         d.edge_between(u, v).hadamard > 0 && is_interior(d, u) &&
         is_interior(d, v) && d.phase(u).is_pauli() &&
         d.phase(v).is_pauli();
}

}  // namespace

ZxDiagram lc_simp(const ZxDiagram& d, VertexId u) {
  check_lc_simp_pre(d, u);
  ZxDiagram out = d;
  lc_simp_in_place(out, u);
  return out;
}

ZxDiagram pivot_simp(const ZxDiagram& d, VertexId u, VertexId v) {
  check_pivot_simp_pre(d, u, v);
  ZxDiagram out = d;
  pivot_simp_in_place(out, u, v);
  return out;
}

std::pair<ZxDiagram, std::vector<RewriteStep>> simplify_to_fixpoint(
    const ZxDiagram& d) {
  std::vector<RewriteStep> trace;
  std::uint64_t ctr = 0;
  ZxDiagram g = to_graph_like(d, &trace, &ctr);

  bool changed = true;
  while (changed) {
    changed = false;

    for (VertexId v : g.spider_ids()) {
      if (try_remove_identity(g, v, trace, ctr)) {
        // Rejoining the neighbors can create a simple spider edge or a
        // parallel pair; renormalize before scanning again.
        std::vector<RewriteStep> sub;
        g = to_graph_like(g, &sub, &ctr);
        trace.insert(trace.end(), sub.begin(), sub.end());
        changed = true;
        break;
      }
    }
    if (changed) continue;

    for (VertexId v : g.spider_ids()) {
      if (lc_simp_eligible(g, v)) {
        trace.push_back({RuleKind::LcSimp, {v}, ctr++});
        lc_simp_in_place(g, v);
        changed = true;
        break;
      }
    }
    if (changed) continue;

    for (const auto& [a, b] : g.edge_pairs()) {
      if (a != b && pivot_simp_eligible(g, a, b)) {
        trace.push_back({RuleKind::PivotSimp, {a, b}, ctr++});
        pivot_simp_in_place(g, a, b);
        changed = true;
        break;
      }
    }
  }
  return {std::move(g), std::move(trace)};
}

ZxDiagram congruence_lc(const ZxDiagram& d, VertexId u) {
  if (!d.has_vertex(u) || d.is_boundary(u))
    throw RewriteError("congruence_lc: subject must be a spider");
  const std::vector<VertexId> nbrs = d.spider_neighbors(u);
  if (nbrs.size() <= 1)
    throw RewriteError("congruence_lc: subject needs degree > 1");

  ZxDiagram out = d;
  const Phase alpha = out.phase(u);

  complement_pairs(out, nbrs);
  for (VertexId w : nbrs) out.add_phase(w, Phase::pi_half());

  // Unfuse u's phase and boundary wire onto a chain realizing the
  // X(-pi/2) correction on u: u(0) -H- s1(-pi/2) -H- s2(alpha).
  out.set_phase(u, Phase());
  const VertexId s1 = out.add_vertex(VertexKind::Z, -Phase::pi_half());
  const VertexId s2 = out.add_vertex(VertexKind::Z, alpha);
  out.add_edge(u, s1, EdgeType::Hadamard);
  out.add_edge(s1, s2, EdgeType::Hadamard);
  for (VertexId b : out.boundary_neighbors(u)) {
    const EdgeData e = out.edge_between(u, b);
    const EdgeType tau =
        e.simple > 0 ? EdgeType::Simple : EdgeType::Hadamard;
    out.remove_edge(u, b, tau);
    out.add_edge(s2, b, tau);
  }
  return to_graph_like(out);
}

ZxDiagram congruence_pivot(const ZxDiagram& d, VertexId u, VertexId v) {
  if (!d.has_vertex(u) || !d.has_vertex(v) || d.is_boundary(u) ||
      d.is_boundary(v) || u == v)
    throw RewriteError("congruence_pivot: subjects must be distinct spiders");
  if (d.edge_between(u, v).hadamard == 0)
    throw RewriteError("congruence_pivot: subjects must be adjacent");

  ZxDiagram out = d;
  const Phase alpha = out.phase(u);
  const Phase beta = out.phase(v);
  const PivotClasses cls = pivot_classes(out, u, v);

  complement_between(out, cls.common, cls.only_u);
  complement_between(out, cls.common, cls.only_v);
  complement_between(out, cls.only_u, cls.only_v);
  for (VertexId w : cls.common) out.add_phase(w, Phase::pi());

  // Each subject hands its phase and boundary wire to a carrier spider
  // that ends up, Hadamard-corrected, on the other subject: the pivot
  // exchanges the two wires.
  out.set_phase(u, Phase());
  out.set_phase(v, Phase());
  const VertexId carrier_u = out.add_vertex(VertexKind::Z, alpha);
  const VertexId carrier_v = out.add_vertex(VertexKind::Z, beta);
  out.add_edge(u, carrier_v, EdgeType::Hadamard);
  out.add_edge(v, carrier_u, EdgeType::Hadamard);
  for (VertexId b : out.boundary_neighbors(u)) {
    const EdgeData e = out.edge_between(u, b);
    const EdgeType tau =
        e.simple > 0 ? EdgeType::Simple : EdgeType::Hadamard;
    out.remove_edge(u, b, tau);
    out.add_edge(carrier_u, b, tau);
  }
  for (VertexId b : out.boundary_neighbors(v)) {
    const EdgeData e = out.edge_between(v, b);
    const EdgeType tau =
        e.simple > 0 ? EdgeType::Simple : EdgeType::Hadamard;
    out.remove_edge(v, b, tau);
    out.add_edge(carrier_v, b, tau);
  }
  return to_graph_like(out);
}

std::vector<CongruenceSubject> eligible_subjects(const ZxDiagram& d,
                                                 CongruenceKind kind) {
  std::vector<CongruenceSubject> out;
  if (kind == CongruenceKind::LocalComplement) {
    for (VertexId v : d.spider_ids())
      if (d.spider_neighbors(v).size() > 1) out.push_back({v, v});
  } else {
    for (const auto& [a, b] : d.edge_pairs()) {
      if (a == b || d.is_boundary(a) || d.is_boundary(b)) continue;
      if (d.edge_between(a, b).hadamard > 0) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace zxopt
