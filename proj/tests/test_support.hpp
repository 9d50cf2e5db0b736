#pragma once

// Test-only reference implementations. Nothing here calls into the library
// code paths it is used to check.

#include <bit>
#include <bitset>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qclique/circuit.hpp"
#include "qclique/graph.hpp"

namespace qclique::testing {

inline Graph diamond_graph() {  // 4 vertices, every edge except {1,2}
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
}

inline Graph square_k4_graph() {  // 6 vertices, the only 3+ cliques lie inside {2,3,4,5}
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

inline Graph path3_graph() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

/// Graph number `code` on n vertices: bit e of `code` is the e-th pair in
/// (0,1), (0,2), ..., (n-2,n-1) order.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  Graph g(n);
  std::size_t e = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++e)
      if ((code >> e) & 1U) g.add_edge(u, v);
  return g;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Neighbourhood bitmasks, built by querying adjacency once per pair.
inline std::vector<std::uint32_t> neighbour_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.vertex_count(), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (u != v && g.adjacent(u, v)) masks[u] |= 1U << v;
  return masks;
}

/// All k-cliques as vertex bitmasks, by scanning every subset of V.
inline std::vector<std::uint32_t> brute_force_clique_masks(const Graph& g, std::size_t k) {
  const auto nbr = neighbour_masks(g);
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = 1U << g.vertex_count();
  for (std::uint32_t s = 1; s < limit; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
    bool ok = true;
    for (std::uint32_t rest = s; rest && ok; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      ok = (nbr[static_cast<std::size_t>(v)] | (1U << v)) == ((nbr[static_cast<std::size_t>(v)] | (1U << v)) | s);
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// Ket label for a vertex-set bitmask: ascending vertices, each as a
/// big-endian field of `bits` characters.
inline std::string label_for_mask(std::uint32_t mask, std::size_t bits) {
  std::string out;
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    const auto v = static_cast<unsigned>(std::countr_zero(rest));
    std::string field = std::bitset<32>(v).to_string();
    out += field.substr(32 - bits);
  }
  return out;
}

inline std::set<std::string> brute_force_clique_labels(const Graph& g, std::size_t k) {
  std::size_t bits = 1;
  while ((std::size_t{1} << bits) < g.vertex_count()) ++bits;
  std::set<std::string> out;
  for (auto s : brute_force_clique_masks(g, k)) out.insert(label_for_mask(s, bits));
  return out;
}

/// Marked-state probability after t Grover iterations with M of N marked.
inline double grover_success(std::uint64_t N, std::uint64_t M, std::size_t t) {
  const double theta = std::asin(std::sqrt(static_cast<double>(M) / static_cast<double>(N)));
  const double s = std::sin((2.0 * static_cast<double>(t) + 1.0) * theta);
  return s * s;
}

/// Applies a gate to a classical basis state, independently of the
/// statevector kernels. Only permutation gates are meaningful here.
inline std::uint64_t apply_classical(const Gate& g, std::uint64_t state) {
  for (auto c : g.controls)
    if (!((state >> c) & 1U)) return state;
  return state ^ (std::uint64_t{1} << g.target);
}

/// Naive dense simulation: for each gate, build the new vector entry by
/// entry from the gate's 2x2 action on the target bit.
inline std::vector<std::complex<double>> reference_run(const std::vector<Gate>& gates, std::size_t qubits,
                                                      std::vector<std::complex<double>> state) {
  const double s = 1.0 / std::sqrt(2.0);
  for (const auto& g : gates) {
    std::vector<std::complex<double>> next(state.size());
    for (std::uint64_t i = 0; i < state.size(); ++i) {
      if (state[i] == 0.0) continue;
      if (g.kind == GateKind::H) {
        const std::uint64_t bit = std::uint64_t{1} << g.target;
        const bool one = i & bit;
        next[i & ~bit] += s * state[i];
        next[i | bit] += (one ? -s : s) * state[i];
      } else {
        next[apply_classical(g, i)] += state[i];
      }
    }
    state = std::move(next);
  }
  (void)qubits;
  return state;
}

}  // namespace qclique::testing
