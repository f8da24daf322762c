// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "qroute/error.hpp"
#include "qroute/generate.hpp"
#include "qroute/routing.hpp"
#include "qroute/verify.hpp"

using namespace qroute;

namespace {

// Five-qubit device in which Q3 and Q4 are not adjacent to Q0.
CouplingGraph five_qubit_device() {
  return CouplingGraph(5, {{1, 0}, {2, 0}, {2, 1}, {3, 2}, {3, 4}, {2, 4}});
}

Configuration random_config(std::mt19937_64& rng, std::size_t n) {
  std::vector<Qubit> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Configuration::from_to_hw(p);
}

std::vector<Qubit> vec(std::span<const Qubit> s) { return {s.begin(), s.end()}; }

// Oracle: apply transpositions to the wire-to-qubit array directly.
std::vector<Qubit> compose(std::vector<Qubit> to_circ,
                           const std::vector<SwapPair>& swaps) {
  for (auto [a, b] : swaps)
    std::swap(to_circ[a], to_circ[b]);
  return to_circ;
}

} // namespace

TEST(IsRemote, PaperDeviceQ0ToQ3AndQ4) {
  const CouplingGraph g = five_qubit_device();
  const auto id = Configuration::identity(5);
  EXPECT_TRUE(is_remote(id, 0, 3, g));
  EXPECT_TRUE(is_remote(id, 0, 4, g));
  EXPECT_FALSE(is_remote(id, 0, 1, g));
  EXPECT_FALSE(is_remote(id, 0, 2, g));
}

TEST(IsRemote, WrongDirectionIsNotRemote) {
  EXPECT_FALSE(
      is_remote(Configuration::identity(2), 0, 1, CouplingGraph(2, {{1, 0}})));
  const CouplingGraph line = CouplingGraph::line(3);
  EXPECT_FALSE(is_remote(Configuration::identity(3), 0, 1, line));
  EXPECT_TRUE(is_remote(Configuration::identity(3), 0, 2, line));
  EXPECT_FALSE(is_remote(Configuration::from_to_hw({0, 2, 1}), 0, 2, line));
}

TEST(ApplySwap, Examples) {
  const auto id = Configuration::identity(3);
  EXPECT_EQ(vec(apply_swap(id, 0, 1).to_hw()), (std::vector<Qubit>{1, 0, 2}));
  EXPECT_EQ(apply_swap(apply_swap(id, 0, 1), 0, 1), id);
  const auto p2 = Configuration::from_to_hw({2, 1, 0, 4, 3});
  EXPECT_EQ(vec(apply_swap(p2, 3, 4).to_hw()),
            (std::vector<Qubit>{2, 1, 0, 3, 4}));
  EXPECT_THROW(apply_swap(id, 1, 1), std::invalid_argument);
}

TEST(ApplySwapProperty, PreservesBijection) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    Configuration c = random_config(rng, n);
    const auto a = static_cast<Qubit>(rng() % n);
    const auto b = static_cast<Qubit>((a + 1 + rng() % (n - 1)) % n);
    const Configuration s = apply_swap(c, a, b);
    for (Qubit i = 0; i < n; ++i) {
      EXPECT_EQ(s.circ(s.hw(i)), i);
      if (c.hw(i) == a)
        EXPECT_EQ(s.hw(i), b);
      else if (c.hw(i) == b)
        EXPECT_EQ(s.hw(i), a);
      else
        EXPECT_EQ(s.hw(i), c.hw(i));
    }
  }
}

TEST(Configuration, RejectsNonPermutations) {
  EXPECT_THROW(Configuration::from_to_hw({0, 0}), std::invalid_argument);
  EXPECT_THROW(Configuration::from_to_hw({0, 2}), std::invalid_argument);
  EXPECT_EQ(Configuration::from_to_circ({1, 2, 0}),
            Configuration::from_to_hw({2, 0, 1}));
  EXPECT_EQ(Configuration::from_to_hw({2, 0, 1}).to_string(), "[2,0,1]");
}

TEST(RouteMi, FiveQubitMoveReading) {
  const CouplingGraph g = CouplingGraph::line(5);
  const auto dm = all_pairs_shortest_paths(g);
  const RoutePlan plan =
      route_mi(Configuration::identity(5), 0, 3, {3, 2}, g, dm);
  EXPECT_EQ(plan.swaps.size(), 3u);
  EXPECT_EQ(vec(plan.resulting_config.to_circ()),
            (std::vector<Qubit>{1, 2, 3, 0, 4}));
  EXPECT_EQ(plan.direction, Support::Reversed);
  EXPECT_EQ(plan.added_hadamards, 4u);
  EXPECT_EQ(plan.final_edge, (Edge{2, 3}));
}

TEST(RouteMi, AdjacentNeedsNoSwaps) {
  const CouplingGraph g = CouplingGraph::line(3);
  const auto dm = all_pairs_shortest_paths(g);
  const auto id = Configuration::identity(3);
  const RoutePlan plan = route_mi(id, 1, 2, {1, 2}, g, dm);
  EXPECT_TRUE(plan.swaps.empty());
  EXPECT_EQ(plan.resulting_config, id);
  EXPECT_EQ(plan.direction, Support::Direct);
  EXPECT_EQ(plan.added_hadamards, 0u);
}

TEST(RouteMi, TwoHopMoveIsEquivalent) {
  const CouplingGraph g = CouplingGraph::line(5);
  const auto dm = all_pairs_shortest_paths(g);
  const auto id = Configuration::identity(5);
  const RoutePlan plan = route_mi(id, 0, 3, {2, 3}, g, dm);
  EXPECT_EQ(plan.swaps, (std::vector<SwapPair>{{0, 1}, {1, 2}}));
  EXPECT_EQ(plan.resulting_config.hw(0), 2u);
  // Statevector oracle: the routed gates realise CNOT(0,3) up to relabeling.
  const Circuit routed(5, plan_gates(plan, g));
  EXPECT_LT(equivalence_error(Circuit(5, {Gate::cnot(0, 3)}), routed, id,
                              plan.resulting_config),
            1e-12);
}

TEST(RouteMi, NoPathWhenControlBlocks) {
  const CouplingGraph g = CouplingGraph::line(3);
  const auto dm = all_pairs_shortest_paths(g);
  try {
    route_mi(Configuration::identity(3), 0, 2, {1, 0}, g, dm);
    FAIL() << "expected NoPath";
  } catch (const RoutingError& e) {
    EXPECT_EQ(e.kind(), RoutingError::Kind::NoPath);
  }
  EXPECT_FALSE(
      try_route_mi(Configuration::identity(3), 0, 2, {1, 0}, g, dm).has_value());
}

TEST(RouteMim, DoublesSwapsAndRestores) {
  const CouplingGraph g = CouplingGraph::line(5);
  const auto dm = all_pairs_shortest_paths(g);
  const auto id = Configuration::identity(5);
  const RoutePlan plan = route_mim(id, 0, 3, {3, 2}, g, dm);
  EXPECT_EQ(plan.swaps.size(), 6u);
  EXPECT_EQ(plan.interaction_index, 3u);
  EXPECT_EQ(plan.resulting_config, id);
  EXPECT_TRUE(route_mim(id, 1, 2, {1, 2}, g, dm).swaps.empty());
  const Circuit routed(5, plan_gates(plan, g));
  EXPECT_LT(equivalence_error(Circuit(5, {Gate::cnot(0, 3)}), routed, id, id),
            1e-12);
}

TEST(RouteProperty, PlansComposeAndLandOnEdge) {
  std::mt19937_64 rng(7);
  int routed = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const CouplingGraph g = random_coupling(rng(), n, rng() % n);
    const auto dm = all_pairs_shortest_paths(g);
    const Configuration c = random_config(rng, n);
    const auto control = static_cast<Qubit>(rng() % n);
    const auto target = static_cast<Qubit>((control + 1 + rng() % (n - 1)) % n);
    const Edge& e = g.edges()[rng() % g.edges().size()];
    const Placement p = rng() % 2 ? Placement{e.control, e.target}
                                  : Placement{e.target, e.control};
    const auto mi = try_route_mi(c, control, target, p, g, dm);
    if (!mi)
      continue;
    ++routed;
    EXPECT_EQ(vec(mi->resulting_config.to_circ()),
              compose(vec(c.to_circ()), mi->swaps));
    EXPECT_EQ(mi->resulting_config.hw(control), p.control_end);
    EXPECT_EQ(mi->resulting_config.hw(target), p.target_end);
    for (auto [a, b] : mi->swaps)
      EXPECT_TRUE(g.adjacent(a, b));
    EXPECT_EQ(mi->added_hadamards,
              g.has_edge(p.control_end, p.target_end) ? 0u : 4u);

    const RoutePlan mim = route_mim(c, control, target, p, g, dm);
    EXPECT_EQ(mim.swaps.size(), 2 * mi->swaps.size());
    EXPECT_EQ(mim.resulting_config, c);
    EXPECT_EQ(vec(c.to_circ()), compose(vec(c.to_circ()), mim.swaps));
  }
  EXPECT_GT(routed, 400);
}

TEST(SelectBestEdge, LineTieGoesToLastEdge) {
  const CouplingGraph g = CouplingGraph::line(5);
  const auto dm = all_pairs_shortest_paths(g);
  const auto id = Configuration::identity(5);
  // Cost table by hand: every edge needs three hops in total.
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    const double direct = placement_cost(id, 0, 4, {e.control, e.target}, dm);
    const double reversed = placement_cost(id, 0, 4, {e.target, e.control}, dm);
    EXPECT_EQ(std::min(direct, reversed), 3.0);
  }
  const EdgeChoice c = select_best_edge(id, 0, 4, g, dm);
  EXPECT_EQ(c.edge_index, 3u);
  EXPECT_EQ(g.edges()[c.edge_index], (Edge{3, 4}));
  EXPECT_EQ(c.placement, (Placement{3, 4}));
  EXPECT_EQ(c.cost, 3.0);
}

TEST(SelectBestEdge, AdjacentPairCostsZero) {
  const CouplingGraph g = CouplingGraph::line(5);
  const auto dm = all_pairs_shortest_paths(g);
  const EdgeChoice c = select_best_edge(Configuration::identity(5), 1, 2, g, dm);
  EXPECT_EQ(g.edges()[c.edge_index], (Edge{1, 2}));
  EXPECT_EQ(c.cost, 0.0);
}

TEST(SelectBestEdge, OnlyEdgeIsReversed) {
  const CouplingGraph g(2, {{1, 0}});
  const auto dm = all_pairs_shortest_paths(g);
  const EdgeChoice c = select_best_edge(Configuration::identity(2), 0, 1, g, dm);
  EXPECT_EQ(c.edge_index, 0u);
  EXPECT_EQ(c.placement, (Placement{0, 1}));
  EXPECT_EQ(supports(g, c.placement.control_end, c.placement.target_end),
            Support::Reversed);
  EXPECT_EQ(c.cost, 0.0);
}

TEST(SelectBestEdge, AllUnreachable) {
  const CouplingGraph g(4, {{2, 3}});
  const auto dm = all_pairs_shortest_paths(g);
  try {
    select_best_edge(Configuration::identity(4), 0, 1, g, dm);
    FAIL() << "expected AllUnreachable";
  } catch (const RoutingError& e) {
    EXPECT_EQ(e.kind(), RoutingError::Kind::AllUnreachable);
  }
  EXPECT_THROW(select_best_edge(Configuration::identity(2), 0, 1,
                                CouplingGraph(2, {}),
                                all_pairs_shortest_paths(CouplingGraph(2, {}))),
               RoutingError);
}

TEST(SelectBestEdgeProperty, MatchesBruteForceCostTable) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const CouplingGraph g = random_coupling(rng(), n, rng() % (n + 1));
    const auto dm = all_pairs_shortest_paths(g);
    const Configuration c = random_config(rng, n);
    const auto control = static_cast<Qubit>(rng() % n);
    const auto target = static_cast<Qubit>((control + 1 + rng() % (n - 1)) % n);
    double best = kUnreachable;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      const double cost =
          std::min(dm.dist(c.hw(control), e.control) + dm.dist(c.hw(target), e.target),
                   dm.dist(c.hw(control), e.target) + dm.dist(c.hw(target), e.control));
      if (cost <= best) {
        best = cost;
        best_index = i;
      }
    }
    const EdgeChoice got = select_best_edge(c, control, target, g, dm);
    EXPECT_EQ(got.cost, best);
    EXPECT_EQ(got.edge_index, best_index);
    EXPECT_EQ(placement_cost(c, control, target, got.placement, dm), best);
    const Edge& e = g.edges()[got.edge_index];
    if (placement_cost(c, control, target, {e.control, e.target}, dm) == best)
      EXPECT_EQ(got.placement, (Placement{e.control, e.target}));
  }
}

TEST(SelectBestEdgeProperty, InvariantUnderRelabeling) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const CouplingGraph g = random_coupling(rng(), n, rng() % (n + 1));
    std::vector<Qubit> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<Edge> relabeled;
    for (const Edge& e : g.edges())
      relabeled.push_back({pi[e.control], pi[e.target]});
    const CouplingGraph h(n, relabeled);

    const Configuration c = random_config(rng, n);
    std::vector<Qubit> moved(n);
    for (Qubit i = 0; i < n; ++i)
      moved[i] = pi[c.hw(i)];
    const Configuration d = Configuration::from_to_hw(moved);

    const auto control = static_cast<Qubit>(rng() % n);
    const auto target = static_cast<Qubit>((control + 1 + rng() % (n - 1)) % n);
    const EdgeChoice a =
        select_best_edge(c, control, target, g, all_pairs_shortest_paths(g));
    const EdgeChoice b =
        select_best_edge(d, control, target, h, all_pairs_shortest_paths(h));
    EXPECT_EQ(a.edge_index, b.edge_index);
    EXPECT_EQ(a.cost, b.cost);
    EXPECT_EQ(pi[a.placement.control_end], b.placement.control_end);
    EXPECT_EQ(pi[a.placement.target_end], b.placement.target_end);
  }
}
