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

#include "zxopt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>

namespace zxopt {

namespace {

using Complex = std::complex<double>;
constexpr double kInvSqrt2 = 0.70710678118654752440;

// ---------------------------------------------------------------- circuits

void apply_single(std::vector<Complex>& col, int n, int q,
                  const Complex m[2][2]) {
  const std::size_t stride = std::size_t{1} << (n - 1 - q);
  for (std::size_t base = 0; base < col.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a = col[i], b = col[i + stride];
      col[i] = m[0][0] * a + m[0][1] * b;
      col[i + stride] = m[1][0] * a + m[1][1] * b;
    }
  }
}

void apply_gate(std::vector<Complex>& col, int n, const Gate& g) {
  switch (g.kind) {
    case GateKind::H: {
      const Complex m[2][2] = {{kInvSqrt2, kInvSqrt2},
                               {kInvSqrt2, -kInvSqrt2}};
      apply_single(col, n, g.q0, m);
      break;
    }
    case GateKind::ZPhase: {
      const Complex e = std::polar(1.0, g.phase.radians());
      const Complex m[2][2] = {{1.0, 0.0}, {0.0, e}};
      apply_single(col, n, g.q0, m);
      break;
    }
    case GateKind::XPhase: {
      // H * diag(1, e^{ia}) * H, expanded.
      const Complex e = std::polar(1.0, g.phase.radians());
      const Complex m[2][2] = {{(1.0 + e) * 0.5, (1.0 - e) * 0.5},
                               {(1.0 - e) * 0.5, (1.0 + e) * 0.5}};
      apply_single(col, n, g.q0, m);
      break;
    }
    case GateKind::Cnot: {
      const std::size_t cbit = std::size_t{1} << (n - 1 - g.q0);
      const std::size_t tbit = std::size_t{1} << (n - 1 - g.q1);
      for (std::size_t i = 0; i < col.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) std::swap(col[i], col[i | tbit]);
      }
      break;
    }
    case GateKind::Cz: {
      const std::size_t abit = std::size_t{1} << (n - 1 - g.q0);
      const std::size_t bbit = std::size_t{1} << (n - 1 - g.q1);
      for (std::size_t i = 0; i < col.size(); ++i) {
        if ((i & abit) && (i & bbit)) col[i] = -col[i];
      }
      break;
    }
  }
}

// ---------------------------------------------------------------- tensors

// Dense tensor over labelled binary axes. Axis 0 owns the highest stride.
struct Tensor {
  std::vector<int> axes;
  std::vector<Complex> data;

  int rank() const { return static_cast<int>(axes.size()); }
};

Tensor scalar_tensor(Complex v) { return Tensor{{}, {v}}; }

// Traces out pairs of equal labels within one tensor (self-loops).
Tensor self_trace(const Tensor& t) {
  std::map<int, std::vector<int>> positions;
  for (int i = 0; i < t.rank(); ++i) positions[t.axes[i]].push_back(i);
  std::vector<int> dup;
  for (auto& [label, pos] : positions) {
    if (pos.size() > 2) throw std::logic_error("label used more than twice");
    if (pos.size() == 2) dup.push_back(label);
  }
  if (dup.empty()) return t;

  std::vector<int> keep;
  for (int i = 0; i < t.rank(); ++i)
    if (positions[t.axes[i]].size() == 1) keep.push_back(i);

  Tensor out;
  for (int i : keep) out.axes.push_back(t.axes[i]);
  out.data.assign(std::size_t{1} << keep.size(), Complex{0.0, 0.0});

  const int r = t.rank();
  for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
    bool diagonal = true;
    for (int label : dup) {
      const auto& pos = positions[label];
      const int b0 = (idx >> (r - 1 - pos[0])) & 1;
      const int b1 = (idx >> (r - 1 - pos[1])) & 1;
      if (b0 != b1) {
        diagonal = false;
        break;
      }
    }
    if (!diagonal) continue;
    std::size_t out_idx = 0;
    for (std::size_t k = 0; k < keep.size(); ++k)
      out_idx |= ((idx >> (r - 1 - keep[k])) & 1)
                 << (keep.size() - 1 - k);
    out.data[out_idx] += t.data[idx];
  }
  return out;
}

// Contracts all shared labels between a and b (tensor product when none).
Tensor contract(const Tensor& a, const Tensor& b) {
  std::vector<int> shared;
  for (int la : a.axes)
    if (std::find(b.axes.begin(), b.axes.end(), la) != b.axes.end())
      shared.push_back(la);

  std::vector<int> a_free, b_free;
  for (int la : a.axes)
    if (std::find(shared.begin(), shared.end(), la) == shared.end())
      a_free.push_back(la);
  for (int lb : b.axes)
    if (std::find(shared.begin(), shared.end(), lb) == shared.end())
      b_free.push_back(lb);

  auto axis_pos = [](const Tensor& t, int label) {
    return static_cast<int>(std::find(t.axes.begin(), t.axes.end(), label) -
                            t.axes.begin());
  };

  Tensor out;
  out.axes = a_free;
  out.axes.insert(out.axes.end(), b_free.begin(), b_free.end());
  if (out.axes.size() > 26)
    throw OracleCapExceeded("intermediate tensor too large");
  out.data.assign(std::size_t{1} << out.axes.size(), Complex{0.0, 0.0});

  const int ra = a.rank(), rb = b.rank();
  const std::size_t n_shared = shared.size();
  const std::size_t n_af = a_free.size(), n_bf = b_free.size();

  std::vector<int> a_free_pos(n_af), b_free_pos(n_bf), a_sh_pos(n_shared),
      b_sh_pos(n_shared);
  for (std::size_t i = 0; i < n_af; ++i) a_free_pos[i] = axis_pos(a, a_free[i]);
  for (std::size_t i = 0; i < n_bf; ++i) b_free_pos[i] = axis_pos(b, b_free[i]);
  for (std::size_t i = 0; i < n_shared; ++i) {
    a_sh_pos[i] = axis_pos(a, shared[i]);
    b_sh_pos[i] = axis_pos(b, shared[i]);
  }

  for (std::size_t af = 0; af < (std::size_t{1} << n_af); ++af) {
    for (std::size_t bf = 0; bf < (std::size_t{1} << n_bf); ++bf) {
      Complex sum{0.0, 0.0};
      for (std::size_t sh = 0; sh < (std::size_t{1} << n_shared); ++sh) {
        std::size_t ia = 0, ib = 0;
        for (std::size_t k = 0; k < n_af; ++k)
          ia |= ((af >> (n_af - 1 - k)) & 1) << (ra - 1 - a_free_pos[k]);
        for (std::size_t k = 0; k < n_shared; ++k) {
          const std::size_t bit = (sh >> (n_shared - 1 - k)) & 1;
          ia |= bit << (ra - 1 - a_sh_pos[k]);
          ib |= bit << (rb - 1 - b_sh_pos[k]);
        }
        for (std::size_t k = 0; k < n_bf; ++k)
          ib |= ((bf >> (n_bf - 1 - k)) & 1) << (rb - 1 - b_free_pos[k]);
        sum += a.data[ia] * b.data[ib];
      }
      out.data[(af << n_bf) | bf] = sum;
    }
  }
  return out;
}

Tensor spider_tensor(VertexKind kind, const Phase& phase, int legs) {
  const Complex e = std::polar(1.0, phase.radians());
  Tensor t;
  t.axes.assign(static_cast<std::size_t>(legs), -1);  // labels filled later
  t.data.assign(std::size_t{1} << legs, Complex{0.0, 0.0});
  if (legs == 0) {
    t.data[0] = 1.0 + e;
    return t;
  }
  if (kind == VertexKind::Z || kind == VertexKind::Boundary) {
    t.data.front() = 1.0;
    t.data.back() += e;
  } else {
    // X spider: conjugate the Z tensor by H on every leg, i.e. entry(b) =
    // (1 + e * (-1)^popcount(b)) / sqrt(2)^legs.
    const double norm = std::pow(kInvSqrt2, legs);
    for (std::size_t b = 0; b < t.data.size(); ++b) {
      const double sign = (std::popcount(b) & 1) ? -1.0 : 1.0;
      t.data[b] = norm * (1.0 + e * sign);
    }
  }
  return t;
}

Tensor hadamard_tensor(int label_a, int label_b) {
  Tensor t;
  t.axes = {label_a, label_b};
  t.data = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
  return t;
}

double magnitude(const Tensor& t) {
  double m = 0.0;
  for (const Complex& v : t.data) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

LinearMap LinearMap::identity(int n_bits) {
  LinearMap m;
  m.n_out_bits = m.n_in_bits = n_bits;
  m.data.assign(m.rows() * m.cols(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = 1.0;
  return m;
}

std::string LinearMap::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      const Complex v = at(r, c);
      os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i) ";
    }
    os << "\n";
  }
  return os.str();
}

int oracle_qubit_cap() {
  if (const char* env = std::getenv("ZXOPT_ORACLE_CAP")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 10;
}

LinearMap evaluate_circuit(const Circuit& c, int qubit_cap) {
  if (qubit_cap <= 0) qubit_cap = oracle_qubit_cap();
  if (c.n_qubits > qubit_cap)
    throw OracleCapExceeded("circuit exceeds oracle qubit cap");
  c.validate();

  const int n = c.n_qubits;
  LinearMap m = LinearMap::identity(n);
  // Apply the gate sequence to each basis column.
  std::vector<Complex> col(m.rows());
  for (std::size_t cidx = 0; cidx < m.cols(); ++cidx) {
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m.at(r, cidx);
    for (const Gate& g : c.gates) apply_gate(col, n, g);
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, cidx) = col[r];
  }
  return m;
}

LinearMap evaluate_diagram(const ZxDiagram& d, int wire_cap,
                           ContractionOrder order) {
  if (wire_cap <= 0) wire_cap = 2 * oracle_qubit_cap() + 4;
  const int n_open =
      static_cast<int>(d.inputs().size() + d.outputs().size());
  if (n_open > wire_cap)
    throw OracleCapExceeded("diagram exceeds oracle wire cap");

  // Assign one label per edge instance, fanning incident labels out to the
  // endpoint tensors in a deterministic order.
  std::map<VertexId, std::vector<int>> incident;
  std::vector<Tensor> tensors;
  int next_label = 0;

  for (const auto& [a, b] : d.edge_pairs()) {
    const EdgeData e = d.edge_between(a, b);
    for (int i = 0; i < e.simple; ++i) {
      const int l = next_label++;
      incident[a].push_back(l);
      incident[b].push_back(l);
    }
    for (int i = 0; i < e.hadamard; ++i) {
      const int l1 = next_label++;
      const int l2 = next_label++;
      incident[a].push_back(l1);
      incident[b].push_back(l2);
      tensors.push_back(hadamard_tensor(l1, l2));
    }
  }

  // Boundary vertices expose their single wire as an open axis; the open
  // label is the one already assigned to that edge.
  std::map<VertexId, int> open_label;
  for (const auto vid : d.vertex_ids()) {
    if (d.is_boundary(vid)) {
      const auto& legs = incident[vid];
      if (legs.size() != 1)
        throw std::logic_error("boundary vertex must have exactly one wire");
      open_label[vid] = legs.front();
      continue;
    }
    const auto& legs = incident[vid];
    Tensor t = spider_tensor(d.kind(vid), d.phase(vid),
                             static_cast<int>(legs.size()));
    t.axes = legs;
    tensors.push_back(self_trace(t));
  }

  if (tensors.empty()) tensors.push_back(scalar_tensor(1.0));

  // Contract pairwise. Greedy picks the connected pair with the smallest
  // result; Sequential always merges into the first tensor.
  while (tensors.size() > 1) {
    std::size_t best_i = 0, best_j = 1;
    if (order == ContractionOrder::Greedy) {
      long best_size = -1;
      bool found_connected = false;
      for (std::size_t i = 0; i < tensors.size(); ++i) {
        for (std::size_t j = i + 1; j < tensors.size(); ++j) {
          int shared = 0;
          for (int la : tensors[i].axes)
            if (std::find(tensors[j].axes.begin(), tensors[j].axes.end(),
                          la) != tensors[j].axes.end())
              ++shared;
          if (shared == 0) continue;
          const long size =
              tensors[i].rank() + tensors[j].rank() - 2 * shared;
          if (!found_connected || size < best_size) {
            found_connected = true;
            best_size = size;
            best_i = i;
            best_j = j;
          }
        }
      }
      // Fully disconnected components: take the two smallest.
      if (!found_connected) {
        best_i = 0;
        best_j = 1;
        for (std::size_t k = 2; k < tensors.size(); ++k)
          if (tensors[k].rank() < tensors[best_j].rank()) best_j = k;
        if (best_j == 0) best_j = 1;
      }
    }
    Tensor merged = contract(tensors[best_i], tensors[best_j]);
    // Keep magnitudes desk-scale; the dropped factor is a global scalar.
    if (double m = magnitude(merged); m > 1e6) {
      for (Complex& v : merged.data) v /= m;
    }
    tensors.erase(tensors.begin() + static_cast<long>(best_j));
    tensors[best_i] = std::move(merged);
  }

  const Tensor& result = tensors.front();

  // Reorder open axes to [outputs..., inputs...].
  std::vector<int> wanted;
  for (VertexId v : d.outputs()) wanted.push_back(open_label.at(v));
  for (VertexId v : d.inputs()) wanted.push_back(open_label.at(v));
  if (wanted.size() != result.axes.size())
    throw std::logic_error("open axes do not match boundary lists");

  LinearMap m;
  m.n_out_bits = static_cast<int>(d.outputs().size());
  m.n_in_bits = static_cast<int>(d.inputs().size());
  m.data.assign(std::size_t{1} << wanted.size(), Complex{0.0, 0.0});

  const int r = result.rank();
  std::vector<int> pos(wanted.size());
  for (std::size_t k = 0; k < wanted.size(); ++k) {
    auto it = std::find(result.axes.begin(), result.axes.end(), wanted[k]);
    if (it == result.axes.end())
      throw std::logic_error("missing open axis in contraction result");
    pos[k] = static_cast<int>(it - result.axes.begin());
  }
  for (std::size_t idx = 0; idx < result.data.size(); ++idx) {
    std::size_t out_idx = 0;
    for (std::size_t k = 0; k < wanted.size(); ++k)
      out_idx |= ((idx >> (r - 1 - pos[k])) & 1) << (wanted.size() - 1 - k);
    m.data[out_idx] = result.data[idx];
  }
  return m;
}

bool equal_up_to_scalar(const LinearMap& a, const LinearMap& b, double tol) {
  if (a.n_out_bits != b.n_out_bits || a.n_in_bits != b.n_in_bits)
    throw std::invalid_argument("equal_up_to_scalar: shape mismatch");

  double max_a = 0.0, max_b = 0.0;
  std::size_t arg_b = 0;
  for (std::size_t i = 0; i < b.data.size(); ++i) {
    max_a = std::max(max_a, std::abs(a.data[i]));
    if (std::abs(b.data[i]) > max_b) {
      max_b = std::abs(b.data[i]);
      arg_b = i;
    }
  }
  if (max_b == 0.0) return max_a <= tol;
  const std::complex<double> lambda = a.data[arg_b] / b.data[arg_b];
  if (std::abs(lambda) == 0.0) return max_a <= tol;

  // Compare on a normalized scale so the absolute tolerance is meaningful
  // for diagrams whose dropped scalars differ by many powers of sqrt(2).
  const double scale = std::max(1.0, max_a);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    worst = std::max(worst, std::abs(a.data[i] - lambda * b.data[i]));
  return worst / scale <= tol;
}

bool circuit_matches_diagram(const Circuit& c, const ZxDiagram& d,
                             double tol) {
  return equal_up_to_scalar(evaluate_circuit(c), evaluate_diagram(d), tol);
}

}  // namespace zxopt
