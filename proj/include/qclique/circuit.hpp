#pragma once

// Gate-level circuit IR over a partitioned qubit register:
//
//   [0, m)          input lines, k slots of ceil(log2 n) qubits each
//   [m, m + a)      edge ancillas, one per vertex pair, a = C(k, 2)
//   m + a           clique ancilla T
//   m + a + 1       output O
//   [m + a + 2, ..) decomposition work qubits (only after QASM round trips)
//
// The algorithmic ancilla count C(k,2) + 2 covers the edge ancillas, T and O.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qclique/error.hpp"
#include "qclique/graph.hpp"

namespace qclique {

using Qubit = std::uint32_t;

struct QubitLayout {
  std::size_t inputs = 0;
  std::size_t edge_ancillas = 0;
  std::size_t work = 0;

  /// Layout for a k-clique search over an n-vertex graph.
  static QubitLayout for_instance(std::size_t n, std::size_t k) {
    return QubitLayout{k * bits_per_vertex(n), static_cast<std::size_t>(binomial(k, 2)), 0};
  }

  /// A layout with no inputs and no edge ancillas has no T/O lines either.
  bool is_empty() const noexcept { return inputs == 0 && edge_ancillas == 0; }

  /// Qubits with algorithmic meaning: inputs, edge ancillas, T and O.
  std::size_t semantic_qubits() const noexcept { return is_empty() ? 0 : inputs + edge_ancillas + 2; }
  std::size_t total() const noexcept { return semantic_qubits() + work; }

  Qubit input(std::size_t i) const noexcept { return static_cast<Qubit>(i); }
  Qubit edge_ancilla(std::size_t x) const noexcept { return static_cast<Qubit>(inputs + x); }
  Qubit clique_ancilla() const noexcept { return static_cast<Qubit>(inputs + edge_ancillas); }
  Qubit output() const noexcept { return static_cast<Qubit>(inputs + edge_ancillas + 1); }
  Qubit work_qubit(std::size_t w) const noexcept { return static_cast<Qubit>(semantic_qubits() + w); }

  friend bool operator==(const QubitLayout&, const QubitLayout&) = default;
};

enum class GateKind { H, X, CX, MCT };

inline std::string_view to_string(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::CX: return "CX";
    case GateKind::MCT: return "MCT";
  }
  return "?";
}

inline std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept {
  if (name == "H") return GateKind::H;
  if (name == "X") return GateKind::X;
  if (name == "CX") return GateKind::CX;
  if (name == "MCT") return GateKind::MCT;
  return std::nullopt;
}

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Qubit> controls;
  Qubit target = 0;

  static Gate h(Qubit t) { return {GateKind::H, {}, t}; }
  static Gate x(Qubit t) { return {GateKind::X, {}, t}; }
  static Gate cx(Qubit c, Qubit t) { return {GateKind::CX, {c}, t}; }
  static Gate mct(std::vector<Qubit> controls, Qubit t) { return {GateKind::MCT, std::move(controls), t}; }

  /// X, CX or MCT depending on how many controls are given.
  static Gate controlled_x(std::vector<Qubit> controls, Qubit t) {
    switch (controls.size()) {
      case 0: return x(t);
      case 1: return cx(controls.front(), t);
      default: return mct(std::move(controls), t);
    }
  }

  /// X, CX and MCT permute basis states; H does not.
  bool is_permutation() const noexcept { return kind != GateKind::H; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws StructureError for arity mismatches and control/target
/// collisions, RangeError for indices outside the layout.
inline void validate_gate(const Gate& g, const QubitLayout& layout) {
  const auto total = layout.total();
  auto check_index = [&](Qubit q) {
    if (q >= total)
      throw RangeError("qubit " + std::to_string(q) + " out of range for " + std::to_string(total) + "-qubit circuit");
  };
  std::size_t expected_min = 0, expected_max = 0;
  switch (g.kind) {
    case GateKind::H:
    case GateKind::X: break;
    case GateKind::CX: expected_min = expected_max = 1; break;
    case GateKind::MCT:
      expected_min = 2;
      expected_max = SIZE_MAX;
      break;
  }
  if (g.controls.size() < expected_min || g.controls.size() > expected_max)
    throw StructureError(std::string(to_string(g.kind)) + " gate with " + std::to_string(g.controls.size()) +
                         " controls");
  check_index(g.target);
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    check_index(g.controls[i]);
    if (g.controls[i] == g.target)
      throw StructureError("control qubit " + std::to_string(g.target) + " equals the target");
    for (std::size_t j = 0; j < i; ++j)
      if (g.controls[j] == g.controls[i])
        throw StructureError("duplicate control qubit " + std::to_string(g.controls[i]));
  }
}

/// Where a circuit came from. Present on everything the synthesizer builds.
struct CircuitMetadata {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t graph_hash = 0;
  std::size_t iterations = 0;           // Grover iterations; 0 for a bare oracle
  std::optional<std::size_t> solutions;  // classical clique count, when known
  std::size_t pruned_combinations = 0;   // combinations skipped by the adjacency guard
  std::size_t pruned_gates = 0;          // gates those combinations would have cost

  friend bool operator==(const CircuitMetadata&, const CircuitMetadata&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(QubitLayout layout, std::optional<CircuitMetadata> metadata = std::nullopt)
      : layout_(layout), metadata_(std::move(metadata)) {}

  Circuit& append(Gate g) {
    validate_gate(g, layout_);
    gates_.push_back(std::move(g));
    return *this;
  }

  Circuit& append(std::span<const Gate> gates) {
    for (const auto& g : gates) validate_gate(g, layout_);
    gates_.insert(gates_.end(), gates.begin(), gates.end());
    return *this;
  }

  const QubitLayout& layout() const noexcept { return layout_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::optional<CircuitMetadata>& metadata() const noexcept { return metadata_; }
  void set_metadata(std::optional<CircuitMetadata> md) { metadata_ = std::move(md); }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  QubitLayout layout_;
  std::vector<Gate> gates_;
  std::optional<CircuitMetadata> metadata_;
};

/// Empty circuit laid out for a k-clique search on n vertices.
inline Circuit new_circuit(std::size_t n, std::size_t k) {
  if (k < 2) throw SynthesisError("k = " + std::to_string(k) + " is unsupported: oracle synthesis needs k >= 2");
  if (k > n) throw SynthesisError("k exceeds vertex count (" + std::to_string(k) + " > " + std::to_string(n) + ")");
  CircuitMetadata md;
  md.n = n;
  md.k = k;
  return Circuit(QubitLayout::for_instance(n, k), md);
}

// ---------------------------------------------------------------------------
// Basis-state labels

/// Bit string of a basis index over the first `width` qubits; character i
/// is qubit i.
inline std::string basis_label(std::uint64_t index, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t q = 0; q < width; ++q)
    if ((index >> q) & 1U) out[q] = '1';
  return out;
}

/// Inverse of basis_label.
inline std::uint64_t basis_index(std::string_view label) {
  std::uint64_t index = 0;
  for (std::size_t q = 0; q < label.size(); ++q) {
    if (label[q] == '1') index |= std::uint64_t{1} << q;
    else if (label[q] != '0') throw ArgumentError("basis label must contain only 0 and 1");
  }
  return index;
}

/// 16 lowercase hex digits.
inline std::string graph_hash_hex(std::uint64_t h) {
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = "0123456789abcdef"[h & 0xf];
  return s;
}

/// "|inputs ancillas T O>" over the semantic register, inputs first.
inline std::string render_ket(std::uint64_t index, const QubitLayout& layout) {
  return "|" + basis_label(index, layout.semantic_qubits()) + "⟩";
}

// ---------------------------------------------------------------------------
// Cost metrics

struct GateCounts {
  std::size_t h = 0;
  std::size_t x = 0;
  std::size_t cx = 0;
  std::size_t mct = 0;

  std::size_t total() const noexcept { return h + x + cx + mct; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct CostReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t input_qubits = 0;
  std::size_t qubit_total = 0;
  std::size_t ancilla_count = 0;        // C(k,2) + 2
  std::size_t edge_mct_controls = 0;    // 2 * ceil(log2 n)
  std::size_t clique_mct_controls = 0;  // C(k,2)
  GateCounts gate_counts;
  std::size_t depth = 0;  // greedy layering by qubit disjointness
  std::size_t max_mct_controls = 0;
  std::size_t vchain_work_qubits = 0;    // QASM decomposition overhead, not algorithmic
  std::size_t vchain_toffoli_count = 0;  // ccx gates once every MCT is V-chain expanded
  std::size_t grover_iterations = 0;
  std::size_t query_complexity_exponent = 0;  // k * ceil(log2 n): O(sqrt(2^e)) queries
  std::size_t pruned_combinations = 0;
  std::size_t gates_saved_by_pruning = 0;
};

inline std::size_t circuit_depth(const Circuit& c) {
  std::vector<std::size_t> level(c.layout().total(), 0);
  std::size_t depth = 0;
  for (const auto& g : c.gates()) {
    std::size_t l = level[g.target];
    for (auto q : g.controls) l = std::max(l, level[q]);
    ++l;
    level[g.target] = l;
    for (auto q : g.controls) level[q] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

inline CostReport cost_report(const Circuit& c) {
  const auto& md = c.metadata();
  if (!md) throw StructureError("cost report requires a synthesized circuit (metadata missing)");
  CostReport r;
  r.n = md->n;
  r.k = md->k;
  r.input_qubits = c.layout().inputs;
  r.qubit_total = c.layout().total();
  r.ancilla_count = static_cast<std::size_t>(binomial(md->k, 2)) + 2;
  r.edge_mct_controls = 2 * bits_per_vertex(md->n);
  r.clique_mct_controls = static_cast<std::size_t>(binomial(md->k, 2));
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H: ++r.gate_counts.h; break;
      case GateKind::X: ++r.gate_counts.x; break;
      case GateKind::CX: ++r.gate_counts.cx; break;
      case GateKind::MCT:
        ++r.gate_counts.mct;
        r.max_mct_controls = std::max(r.max_mct_controls, g.controls.size());
        r.vchain_toffoli_count += g.controls.size() >= 3 ? 2 * (g.controls.size() - 2) + 1 : 1;
        break;
    }
  }
  r.vchain_work_qubits = r.max_mct_controls >= 3 ? r.max_mct_controls - 2 : 0;
  r.depth = circuit_depth(c);
  r.grover_iterations = md->iterations;
  r.query_complexity_exponent = md->k * bits_per_vertex(md->n);
  r.pruned_combinations = md->pruned_combinations;
  r.gates_saved_by_pruning = md->pruned_gates;
  return r;
}

}  // namespace qclique
