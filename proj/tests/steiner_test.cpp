// Copyright 2026 The distqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "distqc/bench.hpp"
#include "distqc/steiner.hpp"
#include "distqc/verify.hpp"

namespace distqc {
namespace {

// Fewest edges of a tree spanning `terms`: the smallest connected node set
// containing them, minus one.
std::size_t brute_force_steiner(const QuotientGraph& q, const std::vector<ProcId>& terms) {
  std::size_t n = q.node_count;
  auto adj = q.adjacency();
  std::size_t tmask = 0;
  for (ProcId t : terms) tmask |= std::size_t{1} << t;
  std::size_t best = n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if ((mask & tmask) != tmask) continue;
    std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best + 1) continue;
    std::size_t start = static_cast<std::size_t>(__builtin_ctzll(mask));
    std::size_t seen = std::size_t{1} << start;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (auto [v, e] : adj[u]) {
        std::size_t bit = std::size_t{1} << v;
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          stack.push_back(v);
        }
      }
    }
    if (seen == mask) best = size - 1;
  }
  return best;
}

// The edges form a tree inside q whose leaves are all terminals and which
// reaches every terminal.
void expect_valid_tree(const QuotientGraph& q, const EdgeList& tree, const std::vector<ProcId>& terms) {
  std::map<ProcId, std::vector<ProcId>> nbr;
  for (auto [a, b] : tree) {
    ASSERT_TRUE(q.edge_index(a, b));
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::set<ProcId> tset(terms.begin(), terms.end());
  if (tset.size() <= 1) {
    EXPECT_TRUE(tree.empty());
    return;
  }
  EXPECT_EQ(nbr.size(), tree.size() + 1);
  std::set<ProcId> seen{terms[0]};
  std::vector<ProcId> stack{terms[0]};
  while (!stack.empty()) {
    ProcId u = stack.back();
    stack.pop_back();
    for (ProcId v : nbr[u]) {
      if (seen.insert(v).second) stack.push_back(v);
    }
  }
  EXPECT_EQ(seen.size(), nbr.size());
  for (ProcId t : tset) EXPECT_TRUE(seen.count(t));
  for (auto& [v, ns] : nbr) {
    if (ns.size() == 1) {
      EXPECT_TRUE(tset.count(v)) << "non-terminal leaf " << v;
    }
  }
}

QuotientGraph random_connected(std::size_t n, Rng& rng) {
  std::vector<std::pair<ProcId, ProcId>> e;
  for (std::size_t v = 1; v < n; ++v) e.push_back({static_cast<ProcId>(rng() % v), static_cast<ProcId>(v)});
  for (std::size_t k = 0; k < n / 2; ++k) {
    ProcId a = static_cast<ProcId>(rng() % n), b = static_cast<ProcId>(rng() % n);
    bool dup = false;
    for (auto [x, y] : e) dup |= (x == a && y == b) || (x == b && y == a);
    if (a != b && !dup) e.push_back({a, b});
  }
  return quotient_from_edges(n, e);
}

std::vector<ProcId> random_terms(std::size_t n, std::size_t k, Rng& rng) {
  std::set<ProcId> s;
  while (s.size() < k) s.insert(static_cast<ProcId>(rng() % n));
  return {s.begin(), s.end()};
}

TEST(SteinerExact, MatchesBruteForce) {
  Rng rng(10);
  std::vector<QuotientGraph> gs{gen_grid(3, 3), gen_grid(3, 4), gen_hex(1), gen_star(5)};
  for (int i = 0; i < 4; ++i) gs.push_back(random_connected(9 + i, rng));
  for (const auto& q : gs) {
    for (int trial = 0; trial < 15; ++trial) {
      auto terms = random_terms(q.node_count, 2 + rng() % 4, rng);
      EdgeList t = steiner_tree_exact({q, terms});
      expect_valid_tree(q, t, terms);
      EXPECT_EQ(t.size(), brute_force_steiner(q, terms));
    }
  }
}

TEST(SteinerApprox, ValidAndWithinFactorTwo) {
  Rng rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    QuotientGraph q = trial % 3 == 0 ? gen_grid(3, 4) : random_connected(8 + trial % 5, rng);
    auto terms = random_terms(q.node_count, 2 + rng() % 5, rng);
    EdgeList a = steiner_tree_approx({q, terms});
    expect_valid_tree(q, a, terms);
    std::size_t opt = steiner_tree_exact({q, terms}).size();
    EXPECT_GE(a.size(), opt);
    EXPECT_LE(a.size(), 2 * opt);
  }
}

TEST(Steiner, DegenerateAndInvalidTerminals) {
  QuotientGraph q = gen_grid(2, 2);
  EXPECT_TRUE(steiner_tree(q, {3}, SteinerMode::kExact).empty());
  EXPECT_TRUE(steiner_tree(q, {3, 3}, SteinerMode::kApprox).empty());
  EXPECT_THROW(steiner_tree(q, {0, 4}, SteinerMode::kApprox), Error);
  std::vector<ProcId> many;
  QuotientGraph big = gen_grid(4, 4);
  for (ProcId p = 0; p < 11; ++p) many.push_back(p);
  EXPECT_THROW(steiner_tree_exact({big, many}), Error);
  EXPECT_NO_THROW(steiner_tree(big, many, SteinerMode::kAuto));
}

TEST(Steiner, GridCornersNeedSixEdges) {
  QuotientGraph q = gen_grid(3, 3);
  EXPECT_EQ(steiner_tree(q, {0, 2, 6, 8}, SteinerMode::kExact).size(), 6u);
  EXPECT_EQ(steiner_tree(q, {0, 2, 6, 8}, SteinerMode::kAuto).size(), 6u);
}

std::map<std::pair<QubitId, QubitId>, std::size_t> pair_counts(const Circuit& c) {
  std::map<std::pair<QubitId, QubitId>, std::size_t> m;
  for (const auto& l : c.layers) {
    for (const Gate& g : l) {
      for (std::size_t i = 1; i < g.q.size(); ++i) ++m[{std::min(g.q[0], g.q[i]), std::max(g.q[0], g.q[i])}];
    }
  }
  return m;
}

TEST(DenseFanIn, CompleteGraphTakesNMinusOneLayers) {
  for (std::size_t n = 2; n <= 9; ++n) {
    Circuit c{n, {}};
    for (QubitId a = 0; a < n; ++a) {
      for (QubitId b = a + 1; b < n; ++b) c.layers.push_back({Gate::cz(a, b)});
    }
    Circuit d = cz_to_dense_fanin(c).to_circuit(n);
    EXPECT_EQ(d.layers.size(), n - 1) << "n=" << n;
    EXPECT_FALSE(validate_layers(d));
    EXPECT_EQ(pair_counts(d), pair_counts(c));
  }
}

TEST(DenseFanIn, PreservesMultiplicityAndIsEquivalent) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 3 + rng() % 5;
    Circuit c = gen_random_cz_circuit(n, 4 + rng() % 20, rng);
    Circuit d = cz_to_dense_fanin(c).to_circuit(n);
    EXPECT_FALSE(validate_layers(d));
    EXPECT_EQ(pair_counts(d), pair_counts(c));
    for (const auto& l : d.layers) {
      for (const Gate& g : l) EXPECT_EQ(g.kind, GateKind::kFanInCZ);
    }
    ExtendedBuilder b(n);
    for (const Gate& g : flatten(d)) b.append(g);
    Rng vr(trial);
    EXPECT_TRUE(channel_equivalent(b.finish(), c, 4, 1, vr));
    Circuit cancelled = cz_to_dense_fanin(c, true).to_circuit(n);
    for (auto [pair, m] : pair_counts(cancelled)) EXPECT_EQ(m, 1u);
  }
}

TEST(DenseFanIn, RejectsNonCzGates) {
  EXPECT_THROW(cz_to_dense_fanin(Circuit{2, {{Gate::cx(0, 1)}}}), Error);
}

TEST(SteinerCompile, OneRoundPerLayerWithinCapacity) {
  QuotientGraph q = gen_path(4);
  Circuit c{4, {{Gate::fanin_cx(0, {1, 2, 3})}, {Gate::cz(1, 2)}, {Gate::yhalf(0)}}};
  CompiledCircuit out = compile_fanin_circuit(c, Placement::identity(4), q);
  EXPECT_EQ(out.metrics, (ScheduleMetrics{2, 4}));
  ASSERT_EQ(out.schedule.assignments.size(), 2u);
  EXPECT_EQ(out.schedule.assignments[0].tau, 1u);
  EXPECT_EQ(out.schedule.assignments[1].tau, 2u);
  Rng rng(1);
  EXPECT_TRUE(channel_equivalent(out.circuit, c, 8, 4, rng));
}

TEST(SteinerCompile, OverflowSplitsLayer) {
  // Two CZs across the single 0-1 link in one layer need two rounds.
  QuotientGraph q = gen_path(2);
  Circuit c{4, {{Gate::cz(0, 1), Gate::cz(2, 3)}}};
  Placement p{{0, 1, 0, 1}};
  CompiledCircuit out = compile_fanin_circuit(c, p, q);
  EXPECT_EQ(out.metrics, (ScheduleMetrics{2, 2}));
  Rng rng(2);
  EXPECT_TRUE(channel_equivalent(out.circuit, c, 8, 4, rng));
}

TEST(SteinerCompile, FanOutAndColocatedTargets) {
  QuotientGraph q = gen_grid(2, 2);
  Circuit c{5, {{Gate::fanout_cx(0, {1, 2, 4})}, {Gate::fanin_cz(3, {0, 4, 2})}}};
  Placement p{{0, 1, 3, 2, 0}};
  CompiledCircuit out = compile_fanin_circuit(c, p, q);
  Rng rng(3);
  EXPECT_TRUE(channel_equivalent(out.circuit, c, 10, 6, rng));
}

}  // namespace
}  // namespace distqc
