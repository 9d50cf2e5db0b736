#pragma once

// Subcommand implementations for the qclique CLI. Each returns its exit code
// and the text destined for stdout/stderr, so tests can drive them in-process.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "qclique/circuit.hpp"
#include "qclique/error.hpp"
#include "qclique/graph.hpp"
#include "qclique/json_io.hpp"
#include "qclique/qasm.hpp"
#include "qclique/simulator.hpp"
#include "qclique/solve.hpp"
#include "qclique/synth.hpp"

namespace qclique::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 2, kResourceError = 3 };

inline constexpr const char* kQubitCapEnv = "QCLIQUE_QUBIT_CAP";

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

struct GraphSource {
  std::filesystem::path path;
  std::optional<std::string> format;  // overrides extension-based detection
};

/// Qubit cap from QCLIQUE_QUBIT_CAP, or the library default.
inline std::size_t default_qubit_cap() {
  if (const char* env = std::getenv(kQubitCapEnv)) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw ArgumentError(std::string(kQubitCapEnv) + " must be a non-negative integer");
    }
  }
  return kDefaultQubitCap;
}

inline Graph load_graph(const GraphSource& src) {
  std::ifstream in(src.path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open graph file " + src.path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  GraphFormat format;
  if (src.format) {
    auto f = graph_format_from_name(*src.format);
    if (!f) throw ArgumentError("unknown graph format \"" + *src.format + "\"");
    format = *f;
  } else {
    format = detect_graph_format(src.path, text);
  }
  return parse_graph(text, format);
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::vector<std::string> encoded_cliques(const Graph& g, std::size_t k) {
  std::vector<std::string> out;
  for (const auto& w : enumerate_cliques(g, k)) out.push_back(encode_combination(w.combination, bits_per_vertex(g.vertex_count())));
  return out;
}

/// Maps library exceptions onto exit codes.
template <typename Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ResourceError& e) {
    return {kResourceError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::ios_base::failure& e) {
    return {kInputError, "", std::string("error: ") + e.what() + "\n"};
  }
}

// ---------------------------------------------------------------------------
// synth

struct SynthOptions {
  GraphSource graph;
  std::size_t k = 0;
  std::string policy = "ccx-vchain";
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> circuit_json;
  std::optional<std::size_t> iterations;
  bool oracle_only = false;
  bool pretty = false;
};

inline CommandResult cmd_synth(const SynthOptions& o) {
  return guarded([&]() -> CommandResult {
    auto policy = mcx_policy_from_name(o.policy);
    if (!policy) throw ArgumentError("unknown MCT policy \"" + o.policy + "\" (expected ccx-vchain or mcx-macro)");
    const Graph g = load_graph(o.graph);
    Circuit circuit;
    bool no_solutions = false;
    if (o.oracle_only) {
      circuit = build_oracle(g, o.k);
    } else {
      auto grover = build_grover(g, o.k, o.iterations);
      no_solutions = grover.no_solutions;
      circuit = std::move(grover.circuit);
    }
    const std::string qasm = emit_qasm(circuit, *policy);
    if (o.out) {
      std::ofstream f(*o.out, std::ios::binary);
      if (!f || !(f << qasm)) throw ArgumentError("cannot write " + o.out->string());
    }
    if (o.circuit_json) {
      std::ofstream f(*o.circuit_json, std::ios::binary);
      if (!f || !(f << dump(to_json(circuit)))) throw ArgumentError("cannot write " + o.circuit_json->string());
    }
    const auto report = cost_report(circuit);

    if (o.pretty) {
      std::ostringstream s;
      s << "n=" << report.n << " k=" << report.k << " qubits=" << report.qubit_total << " (inputs "
        << report.input_qubits << ", ancillas " << report.ancilla_count << ")\n"
        << "edge MCT controls   " << report.edge_mct_controls << "\n"
        << "clique MCT controls " << report.clique_mct_controls << "\n"
        << "gates H/X/CX/MCT    " << report.gate_counts.h << '/' << report.gate_counts.x << '/'
        << report.gate_counts.cx << '/' << report.gate_counts.mct << "\n"
        << "grover iterations   " << report.grover_iterations << (no_solutions ? " (no solutions exist)" : "")
        << "\n";
      if (!o.out) s << '\n' << qasm;
      return {kSuccess, s.str(), ""};
    }

    Json j;
    j["n"] = g.vertex_count();
    j["k"] = o.k;
    j["policy"] = to_string(*policy);
    j["oracle_only"] = o.oracle_only;
    j["no_solutions"] = no_solutions;
    j["qasm_file"] = o.out ? Json(o.out->string()) : Json(nullptr);
    j["cost_report"] = to_json(report);
    if (!o.out) j["qasm"] = qasm;
    return {kSuccess, dump(j), ""};
  });
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
  GraphSource graph;
  std::size_t k = 0;
  std::optional<std::size_t> iterations;
  std::optional<std::size_t> shots;
  std::uint64_t seed = 0;
  std::optional<std::size_t> qubit_cap;
  std::optional<std::size_t> top;
  bool pretty = false;
};

inline CommandResult cmd_simulate(const SimulateOptions& o) {
  return guarded([&]() -> CommandResult {
    const Graph g = load_graph(o.graph);
    const std::size_t cap = o.qubit_cap ? *o.qubit_cap : default_qubit_cap();
    const auto layout = new_circuit(g.vertex_count(), o.k).layout();
    auto grover = build_grover(g, o.k, o.iterations);
    const auto state = run(grover.circuit, cap);
    MeasureOptions mo;
    mo.shots = o.shots;
    mo.seed = o.seed;
    mo.marked_states = encoded_cliques(g, o.k);
    const auto report = measure_inputs(state, mo);
    const std::size_t limit = o.top ? *o.top : SIZE_MAX;

    if (o.pretty) {
      std::ostringstream s;
      s << "n=" << g.vertex_count() << " k=" << o.k << " iterations=" << grover.iterations
        << " solutions=" << grover.solutions << (grover.no_solutions ? " (no solutions exist)" : "") << "\n";
      s << std::left << std::setw(static_cast<int>(std::max<std::size_t>(layout.inputs, 5)) + 2) << "state"
        << "probability  marked\n";
      for (std::size_t i = 0; i < report.ranked.size() && i < limit; ++i) {
        const auto& r = report.ranked[i];
        s << std::left << std::setw(static_cast<int>(std::max<std::size_t>(layout.inputs, 5)) + 2) << r.state
          << std::fixed << std::setprecision(6) << r.probability << "     " << (r.marked ? "*" : "") << "\n";
      }
      return {kSuccess, s.str(), ""};
    }

    Json j;
    j["n"] = g.vertex_count();
    j["k"] = o.k;
    j["qubits"] = layout.total();
    j["iterations"] = grover.iterations;
    j["solutions"] = grover.solutions;
    j["no_solutions"] = grover.no_solutions;
    j["report"] = to_json(report, limit);
    return {kSuccess, dump(j), ""};
  });
}

// ---------------------------------------------------------------------------
// solve

struct SolveCommandOptions {
  GraphSource graph;
  std::optional<std::size_t> qubit_cap;
  bool parallel = false;
  bool pretty = false;
};

inline CommandResult cmd_solve(const SolveCommandOptions& o) {
  return guarded([&]() -> CommandResult {
    const Graph g = load_graph(o.graph);
    SolveOptions so;
    so.qubit_cap = o.qubit_cap ? *o.qubit_cap : default_qubit_cap();
    so.parallel = o.parallel;
    const auto result = solve_max_clique(g, so);

    if (o.pretty) {
      std::ostringstream s;
      s << "maximum clique size " << result.witness.size() << ":";
      for (auto v : result.witness.combination) s << ' ' << v;
      s << (result.partial ? "  (partial: some levels skipped)" : "") << "\n";
      for (const auto& t : result.trace) s << "  k=" << t.k << "  " << to_string(t.status) << "\n";
      return {kSuccess, s.str(), ""};
    }
    Json j;
    j["n"] = g.vertex_count();
    j.update(to_json(result));
    return {kSuccess, dump(j), ""};
  });
}

// ---------------------------------------------------------------------------
// classical

struct ClassicalOptions {
  GraphSource graph;
  std::optional<std::size_t> k;
  bool pretty = false;
};

inline CommandResult cmd_classical(const ClassicalOptions& o) {
  return guarded([&]() -> CommandResult {
    const Graph g = load_graph(o.graph);
    Json j;
    j["n"] = g.vertex_count();
    std::ostringstream s;
    if (o.k) {
      auto cliques = enumerate_cliques(g, *o.k);
      Json list = Json::array();
      for (const auto& w : cliques) list.push_back(to_json(w.combination));
      j["k"] = *o.k;
      j["cliques"] = std::move(list);
      j["encoded"] = encoded_cliques(g, *o.k);
      s << cliques.size() << " clique(s) of size " << *o.k << "\n";
      for (const auto& w : cliques) {
        for (auto v : w.combination) s << v << ' ';
        s << "\n";
      }
    } else {
      auto best = max_clique_classical(g);
      j["maximum_clique"] = {{"size", best.size()}, {"vertices", to_json(best.combination)}};
      s << "maximum clique size " << best.size() << ":";
      for (auto v : best.combination) s << ' ' << v;
      s << "\n";
    }
    return {kSuccess, o.pretty ? s.str() : dump(j), ""};
  });
}

}  // namespace qclique::cli
