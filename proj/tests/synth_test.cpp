#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qclique/simulator.hpp"
#include "qclique/synth.hpp"
#include "test_support.hpp"

using namespace qclique;
using namespace qclique::testing;

namespace {

std::vector<Qubit> targets(const std::vector<Gate>& gates) {
  std::vector<Qubit> out;
  for (const auto& g : gates) out.push_back(g.target);
  return out;
}

}  // namespace

TEST(Activation, ZeroBitPositions) {
  EXPECT_EQ(targets(build_activation({0, 1, 2}, 4)), (std::vector<Qubit>{0, 1, 2, 5}));
  EXPECT_EQ(targets(build_activation({0, 1, 3}, 4)), (std::vector<Qubit>{0, 1, 2}));
  EXPECT_TRUE(build_activation({3}, 4).empty());
  for (const auto& g : build_activation({0, 1, 2}, 4)) EXPECT_EQ(g.kind, GateKind::X);
}

TEST(Activation, DeactivationUndoesActivation) {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4); ++k) {
      for (const auto& c : combinations(n, k)) {
        auto gates = build_activation(c, n);
        auto off = build_deactivation(c, n);
        gates.insert(gates.end(), off.begin(), off.end());
        const std::uint64_t encoded = basis_index(encode_combination(c, bits_per_vertex(n)));
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (k * bits_per_vertex(n))); x += 3) {
          std::uint64_t s = x;
          for (const auto& g : gates) s = apply_classical(g, s);
          EXPECT_EQ(s, x);
        }
        // Activation alone maps the encoding to all ones.
        std::uint64_t s = encoded;
        for (const auto& g : build_activation(c, n)) s = apply_classical(g, s);
        EXPECT_EQ(s, (std::uint64_t{1} << (k * bits_per_vertex(n))) - 1);
      }
    }
  }
}

TEST(CliqueDetector, GateCountsAndShape) {
  const auto g = Graph::complete(4);
  auto d3 = build_clique_detector(g, {0, 1, 2});
  ASSERT_EQ(d3.size(), 7U);  // 3 edge MCTs, clique MCT, 3 mirrored
  for (std::size_t i : {0, 1, 2, 4, 5, 6}) EXPECT_EQ(d3[i].controls.size(), 4U);
  EXPECT_EQ(d3[3].controls, (std::vector<Qubit>{6, 7, 8}));
  EXPECT_EQ(d3[3].target, 9U);
  EXPECT_EQ(d3[0].controls, (std::vector<Qubit>{0, 1, 2, 3}));
  EXPECT_EQ(d3[1].controls, (std::vector<Qubit>{0, 1, 4, 5}));
  EXPECT_EQ(d3[2].controls, (std::vector<Qubit>{2, 3, 4, 5}));
  EXPECT_EQ(d3[4], d3[2]);
  EXPECT_EQ(d3[6], d3[0]);

  EXPECT_EQ(build_clique_detector(g, {0, 1, 2, 3}).size(), 13U);

  // k = 2 degenerates to a single-control clique gate.
  auto d2 = build_clique_detector(Graph::complete(2), {0, 1});
  ASSERT_EQ(d2.size(), 3U);
  EXPECT_EQ(d2[1], Gate::cx(2, 3));
}

TEST(CliqueDetector, RejectsNonCliques) {
  EXPECT_THROW(build_clique_detector(diamond_graph(), {0, 1, 2}), SynthesisError);
  EXPECT_THROW(build_clique_detector(diamond_graph(), {0}), SynthesisError);
}

TEST(Oracle, DiamondStructure) {
  const auto c = build_oracle(diamond_graph(), 3);
  const auto& md = *c.metadata();
  EXPECT_EQ(md.solutions, 2U);
  EXPECT_EQ(md.pruned_combinations, 2U);
  EXPECT_EQ(md.graph_hash, diamond_graph().hash());
  // Two surviving blocks: (0,1,3) has 3 zero bits, (0,2,3) has 3 as well.
  const std::size_t block = 3 + 7 + 3;
  EXPECT_EQ(c.size(), 2 * (2 * block) + 1);
  EXPECT_EQ(c.gates()[2 * block], Gate::cx(9, 10));
}

TEST(Oracle, MirrorProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t k = 2 + trial % (n - 1);
    const auto c = build_oracle(random_graph(n, 0.7, rng), k);
    const auto& gates = c.gates();
    ASSERT_EQ(gates.size() % 2, 1U);
    const std::size_t mid = gates.size() / 2;
    EXPECT_EQ(gates[mid], Gate::cx(c.layout().clique_ancilla(), c.layout().output()));
    for (std::size_t i = 0; i < mid; ++i) EXPECT_EQ(gates[i], gates[gates.size() - 1 - i]);
  }
}

TEST(Oracle, EmptyGraphHasOnlyTheKickback) {
  const auto c = build_oracle(Graph(4), 2);
  EXPECT_EQ(c.size(), 1U);
  EXPECT_EQ(c.metadata()->pruned_combinations, 6U);
  EXPECT_EQ(phase_flip_set(c), std::vector<std::string>{});
}

TEST(Diffusion, SmallestCases) {
  const auto d1 = build_diffusion(1);
  EXPECT_EQ(d1.size(), 7U);
  EXPECT_EQ(d1[3], Gate::x(0));  // zero controls degrade to X
  const auto d2 = build_diffusion(2);
  EXPECT_EQ(d2.size(), 11U);
  EXPECT_EQ(d2[5], Gate::cx(0, 1));
  EXPECT_THROW(build_diffusion(0), ArgumentError);
}

TEST(Diffusion, MatchesInversionAboutTheMean) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const std::size_t N = std::size_t{1} << m;
    const auto gates = build_diffusion(m);
    std::optional<std::complex<double>> phase;
    double worst = 0.0;
    for (std::size_t col = 0; col < N; ++col) {
      std::vector<std::complex<double>> e(N);
      e[col] = 1.0;
      const auto out = reference_run(gates, m, e);
      for (std::size_t row = 0; row < N; ++row) {
        const double ideal = 2.0 / static_cast<double>(N) - (row == col ? 1.0 : 0.0);
        if (!phase && std::abs(ideal) > 0.1) phase = out[row] / ideal;
        worst = std::max(worst, std::abs(out[row] - *phase * ideal));
      }
    }
    ASSERT_TRUE(phase);
    EXPECT_NEAR(std::abs(*phase), 1.0, 1e-12);
    EXPECT_LE(worst, 1e-12) << "m=" << m;
  }
}

TEST(IterationCount, Examples) {
  EXPECT_EQ(iteration_count(64, 2), 4U);
  EXPECT_EQ(iteration_count(256, 1), 12U);
  EXPECT_EQ(iteration_count(4, 1), 1U);
  EXPECT_EQ(iteration_count(4, 4), 1U);
  EXPECT_EQ(iteration_count(64, 0), 0U);
}

TEST(BuildGrover, DiamondDefaults) {
  const auto gc = build_grover(diamond_graph(), 3);
  EXPECT_EQ(gc.iterations, 4U);
  EXPECT_EQ(gc.solutions, 2U);
  EXPECT_FALSE(gc.no_solutions);
  EXPECT_EQ(gc.circuit.metadata()->iterations, 4U);
  const auto oracle = build_oracle(diamond_graph(), 3);
  EXPECT_EQ(gc.circuit.size(), 6 + 1 + 4 * (oracle.size() + build_diffusion(6).size()));
}

TEST(BuildGrover, NoSolutionsFlag) {
  const auto gc = build_grover(Graph(4), 3);
  EXPECT_TRUE(gc.no_solutions);
  EXPECT_EQ(gc.iterations, 1U);
  EXPECT_EQ(gc.solutions, 0U);
  const auto forced = build_grover(Graph(4), 3, 2);
  EXPECT_FALSE(forced.no_solutions);
  EXPECT_EQ(forced.iterations, 2U);
}

TEST(BuildGrover, ZeroIterationsIsInitializationOnly) {
  const auto gc = build_grover(diamond_graph(), 3, 0);
  EXPECT_EQ(gc.circuit.size(), initialization_gates(gc.circuit.layout()).size());
}
