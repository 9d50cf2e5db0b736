#pragma once

// JSON views of circuits and reports. Field names here are the stable
// schema documented in docs/schemas.md.

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "qclique/circuit.hpp"
#include "qclique/error.hpp"
#include "qclique/graph.hpp"
#include "qclique/simulator.hpp"
#include "qclique/solve.hpp"

namespace qclique {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexCombination& c) { return Json(c.vertices()); }

inline Json to_json(const QubitLayout& layout) {
  Json j;
  j["inputs"] = layout.inputs;
  j["edge_ancillas"] = layout.edge_ancillas;
  if (!layout.is_empty()) {
    j["clique_ancilla"] = layout.clique_ancilla();
    j["output"] = layout.output();
  }
  j["work"] = layout.work;
  j["total"] = layout.total();
  return j;
}

inline Json to_json(const CircuitMetadata& md) {
  Json j;
  j["n"] = md.n;
  j["k"] = md.k;
  j["graph_hash"] = graph_hash_hex(md.graph_hash);
  j["iterations"] = md.iterations;
  j["solutions"] = md.solutions ? Json(*md.solutions) : Json(nullptr);
  j["pruned_combinations"] = md.pruned_combinations;
  j["pruned_gates"] = md.pruned_gates;
  return j;
}

inline Json to_json(const Gate& g) {
  Json j;
  j["kind"] = to_string(g.kind);
  j["controls"] = g.controls;
  j["target"] = g.target;
  return j;
}

inline Json to_json(const Circuit& c) {
  Json j;
  j["layout"] = to_json(c.layout());
  j["metadata"] = c.metadata() ? to_json(*c.metadata()) : Json(nullptr);
  Json gates = Json::array();
  for (const auto& g : c.gates()) gates.push_back(to_json(g));
  j["gates"] = std::move(gates);
  return j;
}

/// Inverse of to_json(Circuit). Every gate is validated against the layout.
inline Circuit circuit_from_json(const Json& j) {
  try {
    QubitLayout layout;
    layout.inputs = j.at("layout").at("inputs").get<std::size_t>();
    layout.edge_ancillas = j.at("layout").at("edge_ancillas").get<std::size_t>();
    layout.work = j.at("layout").at("work").get<std::size_t>();
    std::optional<CircuitMetadata> md;
    if (const auto& m = j.at("metadata"); !m.is_null()) {
      CircuitMetadata v;
      v.n = m.at("n").get<std::size_t>();
      v.k = m.at("k").get<std::size_t>();
      v.graph_hash = std::stoull(m.at("graph_hash").get<std::string>(), nullptr, 16);
      v.iterations = m.at("iterations").get<std::size_t>();
      if (!m.at("solutions").is_null()) v.solutions = m.at("solutions").get<std::size_t>();
      v.pruned_combinations = m.at("pruned_combinations").get<std::size_t>();
      v.pruned_gates = m.at("pruned_gates").get<std::size_t>();
      md = v;
    }
    Circuit c(layout, md);
    for (const auto& g : j.at("gates")) {
      auto kind = gate_kind_from_name(g.at("kind").get<std::string>());
      if (!kind) throw StructureError("unknown gate kind " + g.at("kind").dump());
      c.append(Gate{*kind, g.at("controls").get<std::vector<Qubit>>(), g.at("target").get<Qubit>()});
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw StructureError(std::string("malformed circuit JSON: ") + e.what());
  }
}

inline Json to_json(const CostReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["input_qubits"] = r.input_qubits;
  j["qubit_total"] = r.qubit_total;
  j["ancilla_count"] = r.ancilla_count;
  j["edge_mct_controls"] = r.edge_mct_controls;
  j["clique_mct_controls"] = r.clique_mct_controls;
  j["gate_counts"] = {{"H", r.gate_counts.h},
                      {"X", r.gate_counts.x},
                      {"CX", r.gate_counts.cx},
                      {"MCT", r.gate_counts.mct},
                      {"total", r.gate_counts.total()}};
  j["depth"] = r.depth;
  j["depth_convention"] = "greedy layering by qubit disjointness";
  j["max_mct_controls"] = r.max_mct_controls;
  j["vchain_work_qubits"] = r.vchain_work_qubits;
  j["vchain_toffoli_count"] = r.vchain_toffoli_count;
  j["grover_iterations"] = r.grover_iterations;
  j["query_complexity_exponent"] = r.query_complexity_exponent;
  j["pruned_combinations"] = r.pruned_combinations;
  j["gates_saved_by_pruning"] = r.gates_saved_by_pruning;
  return j;
}

/// Rows sorted by descending probability; `limit` keeps only the top rows.
inline Json to_json(const MeasurementReport& r, std::size_t limit = SIZE_MAX) {
  Json j;
  j["input_qubits"] = r.input_qubits;
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.ranked.size() && i < limit; ++i) {
    const auto& row = r.ranked[i];
    rows.push_back({{"state", row.state}, {"probability", row.probability}, {"marked", row.marked}});
  }
  j["rows"] = std::move(rows);
  j["marked"] = r.marked;
  if (r.shots) {
    j["shots"] = *r.shots;
    j["seed"] = r.seed;
    Json counts = Json::object();
    for (const auto& [state, count] : r.counts) counts[state] = count;
    j["counts"] = std::move(counts);
  }
  return j;
}

inline Json to_json(const LevelTrace& t) {
  Json j;
  j["k"] = t.k;
  j["status"] = to_string(t.status);
  j["qubits"] = t.qubits;
  if (t.status != LevelStatus::SkippedResource) {
    j["iterations"] = t.iterations;
    j["candidate"] = t.candidate;
    j["candidate_probability"] = t.candidate_probability;
  }
  return j;
}

inline Json to_json(const MaxCliqueResult& r) {
  Json j;
  j["size"] = r.witness.size();
  j["vertices"] = to_json(r.witness.combination);
  j["partial"] = r.partial;
  Json trace = Json::array();
  for (const auto& t : r.trace) trace.push_back(to_json(t));
  j["trace"] = std::move(trace);
  return j;
}

}  // namespace qclique
