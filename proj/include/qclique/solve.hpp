#pragma once

// Hybrid maximum-clique driver: try k = n, n-1, ..., 2 with a simulated
// Grover search and accept the first sampled candidate that checks out
// classically.

#include <algorithm>
#include <cstddef>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/error.hpp"
#include "qclique/graph.hpp"
#include "qclique/simulator.hpp"
#include "qclique/synth.hpp"

namespace qclique {

enum class LevelStatus { Found, NotFound, SkippedResource };

inline std::string_view to_string(LevelStatus s) noexcept {
  switch (s) {
    case LevelStatus::Found: return "found";
    case LevelStatus::NotFound: return "not found";
    case LevelStatus::SkippedResource: return "skipped: resource";
  }
  return "?";
}

struct LevelTrace {
  std::size_t k = 0;
  LevelStatus status = LevelStatus::NotFound;
  std::size_t qubits = 0;
  std::size_t iterations = 0;
  std::string candidate;  // most probable input state, empty when skipped
  double candidate_probability = 0.0;
  std::optional<VertexCombination> witness;
};

struct MaxCliqueResult {
  CliqueWitness witness;
  std::vector<LevelTrace> trace;
  bool partial = false;  // some larger k was skipped for lack of resources
};

struct SolveOptions {
  std::size_t qubit_cap = kDefaultQubitCap;
  bool parallel = false;
};

/// One Grover search for a k-clique: build, simulate, take the most
/// probable input state, decode it and verify it classically.
inline LevelTrace evaluate_level(const Graph& g, std::size_t k, std::size_t qubit_cap = kDefaultQubitCap) {
  LevelTrace t;
  t.k = k;
  const auto layout = QubitLayout::for_instance(g.vertex_count(), k);
  t.qubits = layout.total();
  if (t.qubits > qubit_cap) {
    t.status = LevelStatus::SkippedResource;
    return t;
  }
  auto grover = build_grover(g, k);
  t.iterations = grover.iterations;
  const auto state = run(grover.circuit, qubit_cap);
  const auto report = measure_inputs(state);
  const auto& top = report.ranked.front();
  t.candidate = top.state;
  t.candidate_probability = top.probability;
  auto decoded = decode_combination(top.state, k, bits_per_vertex(g.vertex_count()), g.vertex_count());
  if (decoded && is_clique(g, *decoded)) {
    t.status = LevelStatus::Found;
    t.witness = std::move(decoded);
  }
  return t;
}

namespace detail {

inline MaxCliqueResult finish(std::vector<LevelTrace> trace) {
  MaxCliqueResult r;
  r.witness = CliqueWitness{VertexCombination{0}};
  std::size_t kept = 0;
  while (kept < trace.size()) {
    const auto& level = trace[kept++];
    if (level.status == LevelStatus::SkippedResource) r.partial = true;
    if (level.status == LevelStatus::Found) {
      r.witness = CliqueWitness{*level.witness};
      break;
    }
  }
  trace.resize(kept);
  r.trace = std::move(trace);
  return r;
}

}  // namespace detail

/// Descending-k search. With `parallel`, levels are evaluated in batches of
/// hardware_concurrency() and the result is identical to the sequential walk.
inline MaxCliqueResult solve_max_clique(const Graph& g, const SolveOptions& options = {}) {
  const std::size_t n = g.vertex_count();
  std::vector<LevelTrace> trace;
  if (!options.parallel) {
    for (std::size_t k = n; k >= 2; --k) {
      trace.push_back(evaluate_level(g, k, options.qubit_cap));
      if (trace.back().status == LevelStatus::Found) break;
    }
    return detail::finish(std::move(trace));
  }

  const std::size_t batch = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::size_t k = n;
  while (k >= 2) {
    std::vector<std::future<LevelTrace>> pending;
    for (std::size_t i = 0; i < batch && k >= 2; ++i, --k)
      pending.push_back(std::async(std::launch::async, [&g, k, cap = options.qubit_cap] { return evaluate_level(g, k, cap); }));
    bool found = false;
    for (auto& f : pending) {
      trace.push_back(f.get());
      found = found || trace.back().status == LevelStatus::Found;
    }
    if (found) break;
  }
  return detail::finish(std::move(trace));
}

}  // namespace qclique
