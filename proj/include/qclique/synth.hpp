#pragma once

// Oracle, diffusion and full Grover circuit synthesis for the k-clique
// problem.
//
// The oracle walks every k-combination of vertices. Combinations whose
// vertex pairs are all adjacent get a block
//
//   activation (X on the zero bits of the combination's encoding)
//   edge MCTs  (one per vertex pair, input slots i and j -> edge ancilla A_x)
//   clique MCT (all edge ancillas -> T)
//   edge MCTs again, reversed
//   deactivation (activation reversed)
//
// so T ends up set exactly on the encodings of k-cliques. A single CX(T, O)
// kicks the phase back through O = |->, and the whole compute section is
// then replayed in reverse to return T to |0>.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/error.hpp"
#include "qclique/graph.hpp"

namespace qclique {

/// X on every input line whose bit in the combination's encoding is 0,
/// in ascending line order.
inline std::vector<Gate> build_activation(const VertexCombination& c, std::size_t n) {
  const auto bits = encode_combination(c, bits_per_vertex(n));
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == '0') gates.push_back(Gate::x(static_cast<Qubit>(i)));
  return gates;
}

/// Activation undone, in reverse line order.
inline std::vector<Gate> build_deactivation(const VertexCombination& c, std::size_t n) {
  auto gates = build_activation(c, n);
  std::reverse(gates.begin(), gates.end());
  return gates;
}

/// Edge detectors, clique detector and edge uncompute for one combination.
/// Every pair of `c` must be adjacent in `g`.
inline std::vector<Gate> build_clique_detector(const Graph& g, const VertexCombination& c) {
  const std::size_t k = c.size();
  if (k < 2) throw SynthesisError("clique detector needs at least two vertices");
  if (!is_clique(g, c)) throw SynthesisError("clique detector requested for a combination that is not a clique");
  const auto layout = QubitLayout::for_instance(g.vertex_count(), k);
  const std::size_t bits = bits_per_vertex(g.vertex_count());

  std::vector<Gate> edges;
  std::size_t x = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j, ++x) {
      std::vector<Qubit> controls;
      controls.reserve(2 * bits);
      for (std::size_t b = 0; b < bits; ++b) controls.push_back(layout.input(i * bits + b));
      for (std::size_t b = 0; b < bits; ++b) controls.push_back(layout.input(j * bits + b));
      edges.push_back(Gate::controlled_x(std::move(controls), layout.edge_ancilla(x)));
    }
  }

  std::vector<Qubit> ancillas;
  for (std::size_t a = 0; a < layout.edge_ancillas; ++a) ancillas.push_back(layout.edge_ancilla(a));

  std::vector<Gate> gates = edges;
  gates.push_back(Gate::controlled_x(std::move(ancillas), layout.clique_ancilla()));
  gates.insert(gates.end(), edges.rbegin(), edges.rend());
  return gates;
}

/// Phase oracle marking the encodings of every k-clique of `g`. The result
/// contains no state preparation; see initialization_gates.
inline Circuit build_oracle(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  Circuit circuit = new_circuit(n, k);
  const auto& layout = circuit.layout();

  CircuitMetadata md = *circuit.metadata();
  md.graph_hash = g.hash();
  md.solutions = 0;

  const std::size_t pairs = static_cast<std::size_t>(binomial(k, 2));
  std::vector<Gate> compute;
  for (const auto& c : combinations(n, k)) {
    auto activation = build_activation(c, n);
    if (!is_clique(g, c)) {
      ++md.pruned_combinations;
      // Forward plus mirror copies of activation, 2*pairs edge MCTs, clique MCT and deactivation.
      md.pruned_gates += 2 * (2 * activation.size() + 2 * pairs + 1);
      continue;
    }
    ++*md.solutions;
    compute.insert(compute.end(), activation.begin(), activation.end());
    auto detector = build_clique_detector(g, c);
    compute.insert(compute.end(), detector.begin(), detector.end());
    compute.insert(compute.end(), activation.rbegin(), activation.rend());
  }

  circuit.append(compute);
  circuit.append(Gate::cx(layout.clique_ancilla(), layout.output()));
  std::reverse(compute.begin(), compute.end());
  circuit.append(compute);
  circuit.set_metadata(md);
  return circuit;
}

/// Inversion about the mean on input lines [0, m): H X (multi-controlled Z) X H,
/// with the controlled Z written as H . MCT . H on the last line. Equals
/// 2/N J - I up to a global phase of -1.
inline std::vector<Gate> build_diffusion(std::size_t input_qubits) {
  if (input_qubits == 0) throw ArgumentError("diffusion needs at least one input qubit");
  const auto last = static_cast<Qubit>(input_qubits - 1);
  std::vector<Gate> gates;
  for (Qubit q = 0; q < input_qubits; ++q) gates.push_back(Gate::h(q));
  for (Qubit q = 0; q < input_qubits; ++q) gates.push_back(Gate::x(q));
  gates.push_back(Gate::h(last));
  std::vector<Qubit> controls;
  for (Qubit q = 0; q < last; ++q) controls.push_back(q);
  gates.push_back(Gate::controlled_x(std::move(controls), last));
  gates.push_back(Gate::h(last));
  for (Qubit q = 0; q < input_qubits; ++q) gates.push_back(Gate::x(q));
  for (Qubit q = 0; q < input_qubits; ++q) gates.push_back(Gate::h(q));
  return gates;
}

/// floor(pi/4 * sqrt(N/M)), at least 1 when M >= 1, and 0 when M = 0.
inline std::size_t iteration_count(std::uint64_t search_space, std::uint64_t solutions) {
  if (solutions == 0) return 0;
  const double ratio = static_cast<double>(search_space) / static_cast<double>(solutions);
  const auto t = static_cast<std::size_t>(std::floor(std::numbers::pi / 4.0 * std::sqrt(ratio)));
  return std::max<std::size_t>(t, 1);
}

/// H on every input and on O. Circuits run from init_state, where O is
/// already |1>, so this leaves O in |->; the X that produces |1> from a
/// hardware |0> is added by emit_qasm.
inline std::vector<Gate> initialization_gates(const QubitLayout& layout) {
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < layout.inputs; ++i) gates.push_back(Gate::h(layout.input(i)));
  gates.push_back(Gate::h(layout.output()));
  return gates;
}

struct GroverCircuit {
  Circuit circuit;
  std::size_t iterations = 0;
  std::size_t solutions = 0;  // M, from the classical enumerator
  bool no_solutions = false;  // M = 0 and the iteration count was chosen automatically
};

/// Initialization followed by `iterations` rounds of oracle + diffusion.
/// Without an explicit count, M comes from enumerate_cliques and the count
/// from iteration_count(2^m, M); when M = 0 one round is built and the
/// result is flagged.
inline GroverCircuit build_grover(const Graph& g, std::size_t k, std::optional<std::size_t> iterations = std::nullopt) {
  const Circuit oracle = build_oracle(g, k);
  const auto& layout = oracle.layout();

  GroverCircuit out;
  out.solutions = enumerate_cliques(g, k).size();
  if (iterations) {
    out.iterations = *iterations;
  } else {
    out.iterations = iteration_count(std::uint64_t{1} << layout.inputs, out.solutions);
    if (out.iterations == 0) {
      out.iterations = 1;
      out.no_solutions = true;
    }
  }

  CircuitMetadata md = *oracle.metadata();
  md.iterations = out.iterations;
  md.solutions = out.solutions;
  md.pruned_gates *= out.iterations;

  Circuit circuit(layout, md);
  circuit.append(initialization_gates(layout));
  const auto diffusion = build_diffusion(layout.inputs);
  for (std::size_t t = 0; t < out.iterations; ++t) {
    circuit.append(oracle.gates());
    circuit.append(diffusion);
  }
  out.circuit = std::move(circuit);
  return out;
}

}  // namespace qclique
