// Scratch validation harness used while pinning rewrite conventions.
#include <cstdio>

#include "zxopt/extract.hpp"
#include "zxopt/graph_like.hpp"
#include "zxopt/oracle.hpp"
#include "zxopt/peephole.hpp"
#include "zxopt/qasm.hpp"
#include "zxopt/random_circuit.hpp"
#include "zxopt/rewrite.hpp"

using namespace zxopt;

static int checks = 0, failures = 0;

static void check(bool ok, const char* what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::printf("FAIL: %s\n", what);
  }
}

int main() {
  // --- oracle basics
  {
    Circuit c(1);
    c.add(Gate::h(0));
    LinearMap m = evaluate_circuit(c);
    check(std::abs(m.at(0, 0) - 0.70710678) < 1e-6, "H matrix 00");
    check(std::abs(m.at(1, 1) + 0.70710678) < 1e-6, "H matrix 11");
  }
  {
    Circuit c(2);
    c.add(Gate::cnot(0, 1));
    LinearMap m = evaluate_circuit(c);
    check(std::abs(m.at(2, 3) - 1.0) < 1e-12 &&
              std::abs(m.at(3, 2) - 1.0) < 1e-12 &&
              std::abs(m.at(0, 0) - 1.0) < 1e-12,
          "CNOT matrix");
  }

  // --- from_circuit oracle agreement on random circuits
  for (int seed = 0; seed < 20; ++seed) {
    Circuit c = random_circuit(3, 25, 0.2, 0.2, 1000 + seed);
    ZxDiagram d = from_circuit(c);
    check(circuit_matches_diagram(c, d), "from_circuit oracle");
    ZxDiagram gl = to_graph_like(d);
    check(is_graph_like(gl), "to_graph_like is graph-like");
    check(circuit_matches_diagram(c, gl), "to_graph_like oracle");
  }

  // --- CZ/CZ, H mapping specifics
  {
    Circuit c(2);
    c.add(Gate::cz(0, 1));
    c.add(Gate::h(1));
    c.add(Gate::cnot(1, 0));
    ZxDiagram gl = to_graph_like(from_circuit(c));
    check(circuit_matches_diagram(c, gl), "cz+h+cnot graph-like oracle");
  }

  // --- lc_simp / pivot_simp soundness on random eligible spots
  int lc_found = 0, pivot_found = 0;
  for (int seed = 0; seed < 40 && (lc_found < 10 || pivot_found < 10);
       ++seed) {
    Circuit c = random_circuit(3, 20, 0.1, 0.3, 2000 + seed);
    ZxDiagram gl = to_graph_like(from_circuit(c));
    for (VertexId v : gl.spider_ids()) {
      if (!gl.is_boundary(v) && gl.boundary_neighbors(v).empty() &&
          gl.phase(v).is_proper_clifford()) {
        ZxDiagram after = lc_simp(gl, v);
        check(circuit_matches_diagram(c, after), "lc_simp oracle");
        ++lc_found;
        break;
      }
    }
    for (const auto& [a, b] : gl.edge_pairs()) {
      if (a == b || gl.is_boundary(a) || gl.is_boundary(b)) continue;
      if (gl.edge_between(a, b).hadamard > 0 &&
          gl.boundary_neighbors(a).empty() &&
          gl.boundary_neighbors(b).empty() && gl.phase(a).is_pauli() &&
          gl.phase(b).is_pauli()) {
        ZxDiagram after = pivot_simp(gl, a, b);
        check(circuit_matches_diagram(c, after), "pivot_simp oracle");
        ++pivot_found;
        break;
      }
    }
  }
  std::printf("lc_simp cases: %d, pivot_simp cases: %d\n", lc_found,
              pivot_found);

  // --- congruences
  int lc_cong = 0, pivot_cong = 0;
  for (int seed = 0; seed < 25; ++seed) {
    Circuit c = random_circuit(3, 20, 0.2, 0.2, 3000 + seed);
    auto [gl, trace] = simplify_to_fixpoint(from_circuit(c));
    check(circuit_matches_diagram(c, gl), "fixpoint oracle");

    auto lcs = eligible_subjects(gl, CongruenceKind::LocalComplement);
    if (!lcs.empty()) {
      ZxDiagram after = congruence_lc(gl, lcs[seed % lcs.size()].u);
      check(is_graph_like(after), "congruence_lc graph-like");
      check(circuit_matches_diagram(c, after), "congruence_lc oracle");
      ++lc_cong;
    }
    auto pvs = eligible_subjects(gl, CongruenceKind::Pivot);
    if (!pvs.empty()) {
      auto s = pvs[seed % pvs.size()];
      ZxDiagram after = congruence_pivot(gl, s.u, s.v);
      check(is_graph_like(after), "congruence_pivot graph-like");
      check(circuit_matches_diagram(c, after), "congruence_pivot oracle");
      ++pivot_cong;
    }
  }
  std::printf("congruence lc cases: %d, pivot cases: %d\n", lc_cong,
              pivot_cong);

  // --- extraction end to end
  for (int seed = 0; seed < 30; ++seed) {
    Circuit c = random_circuit(4, 30, 0.2, 0.2, 4000 + seed);
    auto [gl, trace] = simplify_to_fixpoint(from_circuit(c));
    try {
      Circuit out = extract_circuit(gl);
      check(circuit_matches_diagram(out, gl), "extract oracle vs diagram");
      Circuit opt = basic_optimize(out);
      check(equal_up_to_scalar(evaluate_circuit(opt), evaluate_circuit(c)),
            "pipeline oracle vs original");
    } catch (const ExtractionStuck& e) {
      check(false, e.what());
    }
  }

  // --- swap-only circuit (permutation path)
  {
    Circuit c(3);
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(1, 0));
    c.add(Gate::cnot(0, 1));
    c.add(Gate::cnot(1, 2));
    c.add(Gate::cnot(2, 1));
    c.add(Gate::cnot(1, 2));
    auto [gl, trace] = simplify_to_fixpoint(from_circuit(c));
    Circuit out = extract_circuit(gl);
    check(equal_up_to_scalar(evaluate_circuit(out), evaluate_circuit(c)),
          "swap network extraction");
  }

  std::printf("%d checks, %d failures\n", checks, failures);
  return failures == 0 ? 0 : 1;
}
