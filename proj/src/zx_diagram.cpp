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

#include "zxopt/zx_diagram.hpp"

#include <algorithm>

#include "json.hpp"

namespace zxopt {

namespace {

int& count_for(EdgeData& e, EdgeType t) {
  return t == EdgeType::Simple ? e.simple : e.hadamard;
}

}  // namespace

VertexId ZxDiagram::add_vertex(VertexKind kind, Phase phase) {
  VertexId id = next_id_++;
  vertices_[id] = VertexData{kind, phase};
  adj_[id];
  return id;
}

const VertexData& ZxDiagram::vertex(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end())
    throw std::out_of_range("no vertex " + std::to_string(v));
  return it->second;
}

void ZxDiagram::set_phase(VertexId v, Phase p) {
  vertex(v);
  vertices_[v].phase = p;
}

void ZxDiagram::add_phase(VertexId v, Phase p) {
  vertex(v);
  vertices_[v].phase += p;
}

void ZxDiagram::set_kind(VertexId v, VertexKind k) {
  vertex(v);
  vertices_[v].kind = k;
}

void ZxDiagram::add_edge(VertexId a, VertexId b, EdgeType type) {
  vertex(a);
  vertex(b);
  if (a > b) std::swap(a, b);
  EdgeData& e = adj_[a][b];
  ++count_for(e, type);
  if (a != b) adj_[b][a] = e;
}

void ZxDiagram::remove_edge(VertexId a, VertexId b, EdgeType type) {
  if (a > b) std::swap(a, b);
  auto ait = adj_.find(a);
  if (ait == adj_.end()) throw std::logic_error("remove_edge: no such edge");
  auto eit = ait->second.find(b);
  if (eit == ait->second.end() || count_for(eit->second, type) == 0)
    throw std::logic_error("remove_edge: no such edge");
  --count_for(eit->second, type);
  if (eit->second.total() == 0) {
    ait->second.erase(eit);
    if (a != b) adj_[b].erase(a);
  } else if (a != b) {
    adj_[b][a] = eit->second;
  }
}

void ZxDiagram::remove_all_edges(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  auto ait = adj_.find(a);
  if (ait == adj_.end()) return;
  ait->second.erase(b);
  if (a != b) adj_[b].erase(a);
}

void ZxDiagram::toggle_hadamard_edge(VertexId a, VertexId b) {
  const EdgeData e = edge_between(a, b);
  if (e.hadamard > 0)
    remove_edge(a, b, EdgeType::Hadamard);
  else
    add_edge(a, b, EdgeType::Hadamard);
}

void ZxDiagram::remove_vertex(VertexId v) {
  vertex(v);
  auto it = adj_.find(v);
  for (const auto& [w, e] : it->second) {
    if (w != v) adj_[w].erase(v);
  }
  adj_.erase(it);
  vertices_.erase(v);
  std::erase(inputs_, v);
  std::erase(outputs_, v);
}

EdgeData ZxDiagram::edge_between(VertexId a, VertexId b) const {
  auto ait = adj_.find(a);
  if (ait == adj_.end()) return {};
  auto eit = ait->second.find(b);
  return eit == ait->second.end() ? EdgeData{} : eit->second;
}

std::vector<VertexId> ZxDiagram::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  auto it = adj_.find(v);
  if (it == adj_.end()) return out;
  for (const auto& [w, e] : it->second)
    if (w != v) out.push_back(w);
  return out;
}

std::vector<VertexId> ZxDiagram::spider_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (VertexId w : neighbors(v))
    if (!is_boundary(w)) out.push_back(w);
  return out;
}

std::vector<VertexId> ZxDiagram::boundary_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (VertexId w : neighbors(v))
    if (is_boundary(w)) out.push_back(w);
  return out;
}

int ZxDiagram::degree(VertexId v) const {
  int d = 0;
  auto it = adj_.find(v);
  if (it == adj_.end()) return 0;
  for (const auto& [w, e] : it->second) d += (w == v ? 2 : 1) * e.total();
  return d;
}

EdgeData ZxDiagram::self_loops(VertexId v) const { return edge_between(v, v); }

std::vector<VertexId> ZxDiagram::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& [id, data] : vertices_) out.push_back(id);
  return out;
}

std::vector<VertexId> ZxDiagram::spider_ids() const {
  std::vector<VertexId> out;
  for (const auto& [id, data] : vertices_)
    if (data.kind != VertexKind::Boundary) out.push_back(id);
  return out;
}

std::size_t ZxDiagram::num_spiders() const {
  std::size_t n = 0;
  for (const auto& [id, data] : vertices_)
    if (data.kind != VertexKind::Boundary) ++n;
  return n;
}

std::vector<std::pair<VertexId, VertexId>> ZxDiagram::edge_pairs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [a, nbrs] : adj_)
    for (const auto& [b, e] : nbrs)
      if (a <= b) out.emplace_back(a, b);
  return out;
}

std::size_t ZxDiagram::num_edge_instances() const {
  std::size_t n = 0;
  for (const auto& [a, nbrs] : adj_)
    for (const auto& [b, e] : nbrs)
      if (a <= b) n += static_cast<std::size_t>(e.total());
  return n;
}

void ZxDiagram::add_input(VertexId v) {
  if (!is_boundary(v)) throw std::logic_error("input must be a boundary");
  inputs_.push_back(v);
}

void ZxDiagram::add_output(VertexId v) {
  if (!is_boundary(v)) throw std::logic_error("output must be a boundary");
  outputs_.push_back(v);
}

void ZxDiagram::set_io(std::vector<VertexId> ins, std::vector<VertexId> outs) {
  inputs_ = std::move(ins);
  outputs_ = std::move(outs);
}

void ZxDiagram::check_invariants() const {
  for (const auto& [a, nbrs] : adj_) {
    if (!vertices_.count(a)) throw std::logic_error("edge from missing vertex");
    for (const auto& [b, e] : nbrs) {
      if (!vertices_.count(b)) throw std::logic_error("edge to missing vertex");
      if (e.total() <= 0) throw std::logic_error("empty edge record");
    }
  }
  std::map<VertexId, int> io_count;
  for (VertexId v : inputs_) ++io_count[v];
  for (VertexId v : outputs_) ++io_count[v];
  for (const auto& [id, data] : vertices_) {
    if (data.kind == VertexKind::Boundary) {
      if (degree(id) != 1)
        throw std::logic_error("boundary vertex must have degree 1");
      if (io_count[id] != 1)
        throw std::logic_error(
            "boundary vertex must appear in exactly one io list");
      if (!data.phase.is_zero())
        throw std::logic_error("boundary vertex must carry zero phase");
    } else if (io_count[id] != 0) {
      throw std::logic_error("io list references a non-boundary vertex");
    }
  }
}

std::string ZxDiagram::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& [id, data] : vertices_) {
    const char* kind = data.kind == VertexKind::Boundary ? "boundary"
                       : data.kind == VertexKind::Z      ? "z"
                                                         : "x";
    j["vertices"].push_back({{"id", id},
                             {"kind", kind},
                             {"phase",
                              {{"num", data.phase.num()},
                               {"den", data.phase.den()}}}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edge_pairs()) {
    const EdgeData e = edge_between(a, b);
    for (int i = 0; i < e.simple; ++i)
      j["edges"].push_back({{"src", a}, {"dst", b}, {"type", "simple"}});
    for (int i = 0; i < e.hadamard; ++i)
      j["edges"].push_back({{"src", a}, {"dst", b}, {"type", "hadamard"}});
  }
  j["inputs"] = inputs_;
  j["outputs"] = outputs_;
  return j.dump(2);
}

ZxDiagram ZxDiagram::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ZxDiagram d;
  std::map<VertexId, VertexId> remap;
  for (const auto& jv : j.at("vertices")) {
    const std::string kind = jv.at("kind");
    VertexKind k = kind == "boundary" ? VertexKind::Boundary
                   : kind == "z"      ? VertexKind::Z
                   : kind == "x"      ? VertexKind::X
                                      : throw std::invalid_argument(
                                            "unknown vertex kind " + kind);
    Phase p(jv.at("phase").at("num").get<std::int64_t>(),
            jv.at("phase").at("den").get<std::int64_t>());
    remap[jv.at("id").get<VertexId>()] = d.add_vertex(k, p);
  }
  for (const auto& je : j.at("edges")) {
    const std::string type = je.at("type");
    d.add_edge(remap.at(je.at("src").get<VertexId>()),
               remap.at(je.at("dst").get<VertexId>()),
               type == "simple" ? EdgeType::Simple : EdgeType::Hadamard);
  }
  std::vector<VertexId> ins, outs;
  for (const auto& v : j.at("inputs")) ins.push_back(remap.at(v.get<VertexId>()));
  for (const auto& v : j.at("outputs"))
    outs.push_back(remap.at(v.get<VertexId>()));
  d.set_io(std::move(ins), std::move(outs));
  return d;
}

}  // namespace zxopt
