#pragma once

// Exact dense statevector simulation.
//
// Basis index bit q holds qubit q. Permutation gates (X, CX, MCT) only swap
// amplitudes, so they introduce no rounding at all; H is the only gate that
// does arithmetic.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/error.hpp"

namespace qclique {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultQubitCap = 26;
inline constexpr std::size_t kMaxAddressableQubits = 40;

class Statevector {
 public:
  /// |0...0> over the layout. Throws ResourceError above `qubit_cap`.
  explicit Statevector(const QubitLayout& layout, std::size_t qubit_cap = kDefaultQubitCap) : layout_(layout) {
    const auto q = layout.total();
    if (q > qubit_cap || q > kMaxAddressableQubits) {
      const double mib = std::ldexp(static_cast<double>(sizeof(Amplitude)), static_cast<int>(q)) / (1024.0 * 1024.0);
      throw ResourceError(std::to_string(q) + "-qubit statevector needs 2^" + std::to_string(q) + " amplitudes (" +
                              std::to_string(static_cast<std::uint64_t>(mib)) + " MiB), above the cap of " +
                              std::to_string(qubit_cap) + " qubits",
                          q);
    }
    amps_.assign(std::size_t{1} << q, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
  }

  const QubitLayout& layout() const noexcept { return layout_; }
  std::size_t qubit_count() const noexcept { return layout_.total(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }

  double norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto& a : amps_) sum += std::norm(a);
    return sum;
  }

  void apply(const Gate& g) {
    validate_gate(g, layout_);
    if (g.kind == GateKind::H) apply_hadamard(g.target);
    else apply_controlled_x(g.controls, g.target);
  }

 private:
  void apply_hadamard(Qubit target) {
    const double s = 1.0 / std::numbers::sqrt2;
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t size = amps_.size();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const Amplitude a = amps_[i];
        const Amplitude b = amps_[i + stride];
        amps_[i] = s * (a + b);
        amps_[i + stride] = s * (a - b);
      }
    }
  }

  // Visits only the indices with every control set and the target clear by
  // walking the submasks of the free bits.
  void apply_controlled_x(const std::vector<Qubit>& controls, Qubit target) {
    std::uint64_t control_mask = 0;
    for (auto c : controls) control_mask |= std::uint64_t{1} << c;
    const std::uint64_t target_bit = std::uint64_t{1} << target;
    const std::uint64_t full = amps_.size() - 1;
    const std::uint64_t free = full & ~(control_mask | target_bit);
    std::uint64_t s = 0;
    do {
      const std::uint64_t i = s | control_mask;
      std::swap(amps_[i], amps_[i | target_bit]);
      s = (s - free) & free;
    } while (s != 0);
  }

  QubitLayout layout_;
  std::vector<Amplitude> amps_;
};

/// All inputs and ancillas |0>, output |1>.
inline Statevector init_state(const QubitLayout& layout, std::size_t qubit_cap = kDefaultQubitCap) {
  Statevector s(layout, qubit_cap);
  if (!layout.is_empty()) s.apply(Gate::x(layout.output()));
  return s;
}

inline Statevector apply_gate(Statevector s, const Gate& g) {
  s.apply(g);
  return s;
}

inline void apply_gates(Statevector& s, std::span<const Gate> gates) {
  for (const auto& g : gates) s.apply(g);
}

/// Runs the circuit from init_state.
inline Statevector run(const Circuit& c, std::size_t qubit_cap = kDefaultQubitCap) {
  Statevector s = init_state(c.layout(), qubit_cap);
  apply_gates(s, c.gates());
  return s;
}

// ---------------------------------------------------------------------------
// Oracle introspection

struct OracleAnalysis {
  std::vector<std::string> flipped;  // input labels with phase -1, sorted
  double off_ancilla_mass = 0.0;     // probability left on nonzero ancilla/work states
  std::optional<std::string> failure;
};

/// Runs a permutation-only oracle on the uniform input superposition with O
/// in |-> and reports which input states came back negated.
///
/// The state after the prelude has 2^(m+1) nonzero amplitudes and X/CX/MCT
/// only move them around, so the simulation tracks just those entries
/// instead of the full 2^total vector. This keeps instances whose full
/// register exceeds the dense cap (e.g. n = 5, k = 5 at 27 qubits) exact.
inline OracleAnalysis analyze_oracle(const Circuit& oracle) {
  const auto& layout = oracle.layout();
  const std::size_t m = layout.inputs;
  if (layout.is_empty()) throw StructureError("oracle circuit has an empty layout");
  if (m > 26) throw ResourceError("oracle analysis over " + std::to_string(m) + " input qubits is too large", m);
  if (layout.total() > 64) throw ResourceError("more than 64 qubits cannot be indexed", layout.total());
  for (const auto& g : oracle.gates())
    if (!g.is_permutation()) throw StructureError("oracle analysis requires a permutation-only circuit (found H)");

  const std::uint64_t input_mask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t output_bit = std::uint64_t{1} << layout.output();
  const std::uint64_t inputs = std::uint64_t{1} << m;
  const double magnitude = 1.0 / std::sqrt(static_cast<double>(inputs) * 2.0);

  struct Entry {
    std::uint64_t index;
    double amplitude;
  };
  std::vector<Entry> entries;
  entries.reserve(2 * inputs);
  for (std::uint64_t x = 0; x < inputs; ++x) {
    entries.push_back({x, magnitude});
    entries.push_back({x | output_bit, -magnitude});
  }

  for (const auto& g : oracle.gates()) {
    std::uint64_t control_mask = 0;
    for (auto c : g.controls) control_mask |= std::uint64_t{1} << c;
    const std::uint64_t target_bit = std::uint64_t{1} << g.target;
    for (auto& e : entries)
      if ((e.index & control_mask) == control_mask) e.index ^= target_bit;
  }

  OracleAnalysis out;
  const std::uint64_t clean_mask = input_mask | output_bit;
  std::vector<double> with_o0(inputs, 0.0), with_o1(inputs, 0.0);
  for (const auto& e : entries) {
    if (e.index & ~clean_mask) {
      out.off_ancilla_mass += e.amplitude * e.amplitude;
      continue;
    }
    ((e.index & output_bit) ? with_o1 : with_o0)[e.index & input_mask] = e.amplitude;
  }

  constexpr double tol = 1e-10;
  for (std::uint64_t x = 0; x < inputs; ++x) {
    const double a0 = with_o0[x], a1 = with_o1[x];
    if (std::abs(std::abs(a0) - magnitude) > tol || std::abs(a0 + a1) > tol) {
      if (!out.failure)
        out.failure = "input state " + basis_label(x, m) + " does not factor as +/-(uniform)(x)|-> after the oracle";
      continue;
    }
    if (a0 < 0) out.flipped.push_back(basis_label(x, m));
  }
  std::sort(out.flipped.begin(), out.flipped.end());
  return out;
}

/// Input states whose sign the oracle flips. Throws StructureError when the
/// circuit is not a clean phase oracle.
inline std::vector<std::string> phase_flip_set(const Circuit& oracle) {
  auto analysis = analyze_oracle(oracle);
  if (analysis.failure) throw StructureError("broken oracle: " + *analysis.failure);
  if (analysis.off_ancilla_mass > 1e-12) throw StructureError("broken oracle: ancillas not restored");
  return std::move(analysis.flipped);
}

// ---------------------------------------------------------------------------
// Measurement

struct MeasurementRow {
  std::string state;
  double probability = 0.0;
  bool marked = false;
};

struct MeasurementReport {
  std::size_t input_qubits = 0;
  std::vector<double> probabilities;   // indexed by input basis index
  std::vector<MeasurementRow> ranked;  // descending probability, ties by label
  std::vector<std::string> marked;
  std::optional<std::size_t> shots;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> counts;  // sampled histogram, only with shots

  double total_probability() const {
    double sum = 0.0;
    for (double p : probabilities) sum += p;
    return sum;
  }

  double probability_of(const std::string& state) const { return probabilities.at(basis_index(state)); }
};

struct MeasureOptions {
  std::optional<std::size_t> shots;
  std::uint64_t seed = 0;
  /// States to flag as marked. Without it, states more likely than the
  /// uniform 2^-m are flagged.
  std::optional<std::vector<std::string>> marked_states;
};

/// Exact marginal over the input register, plus an optional seeded sample.
inline MeasurementReport measure_inputs(const Statevector& s, const MeasureOptions& options = {}) {
  const std::size_t m = s.layout().inputs;
  const std::uint64_t input_mask = (std::uint64_t{1} << m) - 1;
  MeasurementReport r;
  r.input_qubits = m;
  r.probabilities.assign(std::size_t{1} << m, 0.0);
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) r.probabilities[i & input_mask] += std::norm(amps[i]);

  std::set<std::string> marked;
  if (options.marked_states) marked.insert(options.marked_states->begin(), options.marked_states->end());
  const double uniform = 1.0 / static_cast<double>(r.probabilities.size());

  r.ranked.reserve(r.probabilities.size());
  for (std::size_t x = 0; x < r.probabilities.size(); ++x) {
    MeasurementRow row{basis_label(x, m), r.probabilities[x], false};
    row.marked = options.marked_states ? marked.contains(row.state) : row.probability > uniform + 1e-12;
    r.ranked.push_back(std::move(row));
  }
  std::stable_sort(r.ranked.begin(), r.ranked.end(), [](const auto& a, const auto& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return a.state < b.state;
  });
  for (const auto& row : r.ranked)
    if (row.marked) r.marked.push_back(row.state);
  std::sort(r.marked.begin(), r.marked.end());

  if (options.shots) {
    r.shots = options.shots;
    r.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    std::discrete_distribution<std::size_t> dist(r.probabilities.begin(), r.probabilities.end());
    for (std::size_t i = 0; i < *options.shots; ++i) ++r.counts[basis_label(dist(rng), m)];
  }
  return r;
}

}  // namespace qclique
