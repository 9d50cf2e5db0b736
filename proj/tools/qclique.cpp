// qclique: synthesize, simulate and solve Grover k-clique circuits.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

int emit(const qclique::cli::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qclique::cli;

  CLI::App app{"Grover-search circuit synthesis and verification for k-clique and maximum clique"};
  app.require_subcommand(1);

  std::optional<std::string> format;
  auto add_graph = [&](CLI::App* sub, GraphSource& src) {
    sub->add_option("graph", src.path, "Graph file (edge-list, adjacency-matrix or DIMACS)")->required();
    sub->add_option("--format", format, "Graph format: edge-list | adjacency-matrix | dimacs (default: by extension)");
  };

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Emit the Grover circuit as OpenQASM 2.0 plus a cost report");
  add_graph(synth_cmd, synth.graph);
  synth_cmd->add_option("-k,--k", synth.k, "Clique size")->required();
  synth_cmd->add_option("--policy", synth.policy, "MCT lowering: ccx-vchain | mcx-macro");
  synth_cmd->add_option("--out", synth.out, "Write QASM here instead of embedding it in the JSON");
  synth_cmd->add_option("--circuit-json", synth.circuit_json, "Also write the gate-level circuit as JSON");
  synth_cmd->add_option("--iterations", synth.iterations, "Grover iterations (default: floor(pi/4 sqrt(N/M)))");
  synth_cmd->add_flag("--oracle-only", synth.oracle_only, "Emit the bare oracle");
  synth_cmd->add_flag("--pretty", synth.pretty, "Human-readable output");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate the Grover circuit and report input-register probabilities");
  add_graph(sim_cmd, sim.graph);
  sim_cmd->add_option("-k,--k", sim.k, "Clique size")->required();
  sim_cmd->add_option("--iterations", sim.iterations, "Grover iterations (default: automatic)");
  sim_cmd->add_option("--shots", sim.shots, "Also draw this many seeded samples");
  sim_cmd->add_option("--seed", sim.seed, "Sampling seed");
  sim_cmd->add_option("--qubit-cap", sim.qubit_cap, "Largest statevector in qubits (env QCLIQUE_QUBIT_CAP, default 26)");
  sim_cmd->add_option("--top", sim.top, "Only report the N most probable states");
  sim_cmd->add_flag("--pretty", sim.pretty, "Human-readable output");

  SolveCommandOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find a maximum clique by descending k-clique Grover searches");
  add_graph(solve_cmd, solve.graph);
  solve_cmd->add_option("--qubit-cap", solve.qubit_cap, "Largest statevector in qubits (env QCLIQUE_QUBIT_CAP, default 26)");
  solve_cmd->add_flag("--parallel", solve.parallel, "Evaluate k levels concurrently");
  solve_cmd->add_flag("--pretty", solve.pretty, "Human-readable output");

  ClassicalOptions classical;
  auto* classical_cmd = app.add_subcommand("classical", "Brute-force k-cliques, or a maximum clique without -k");
  add_graph(classical_cmd, classical.graph);
  classical_cmd->add_option("-k,--k", classical.k, "Clique size");
  classical_cmd->add_flag("--pretty", classical.pretty, "Human-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*synth_cmd) {
    synth.graph.format = format;
    return emit(cmd_synth(synth));
  }
  if (*sim_cmd) {
    sim.graph.format = format;
    return emit(cmd_simulate(sim));
  }
  if (*solve_cmd) {
    solve.graph.format = format;
    return emit(cmd_solve(solve));
  }
  classical.graph.format = format;
  return emit(cmd_classical(classical));
}
