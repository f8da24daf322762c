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

#include "qroute/routing.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qroute/error.hpp"

namespace qroute {

bool is_remote(const Configuration& config, Qubit control, Qubit target,
               const CouplingGraph& graph) {
  return !graph.adjacent(config.hw(control), config.hw(target));
}

double placement_cost(const Configuration& config, Qubit control, Qubit target,
                      const Placement& placement, const DistanceMatrix& dm) {
  return dm.dist(config.hw(control), placement.control_end) +
         dm.dist(config.hw(target), placement.target_end);
}

EdgeChoice select_best_edge(const Configuration& config, Qubit control,
                            Qubit target, const CouplingGraph& graph,
                            const DistanceMatrix& dm) {
  const auto& edges = graph.edges();
  if (edges.empty())
    throw RoutingError(RoutingError::Kind::AllUnreachable,
                       "coupling graph has no edges");

  EdgeChoice best;
  best.cost = kUnreachable;
  bool found = false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Placement direct{edges[i].control, edges[i].target};
    const Placement reversed{edges[i].target, edges[i].control};
    const double cd = placement_cost(config, control, target, direct, dm);
    const double cr = placement_cost(config, control, target, reversed, dm);
    const bool use_direct = cd <= cr;
    const double cost = use_direct ? cd : cr;
    if (cost == kUnreachable)
      continue;
    if (!found || cost <= best.cost) {
      best = EdgeChoice{i, use_direct ? direct : reversed, cost};
      found = true;
    }
  }
  if (!found)
    throw RoutingError(RoutingError::Kind::AllUnreachable,
                       "no coupling edge is reachable from qubits " +
                           std::to_string(control) + " and " +
                           std::to_string(target));
  return best;
}

std::vector<Qubit> shortest_path_avoiding(const CouplingGraph& graph,
                                          Qubit from, Qubit to, Qubit blocked) {
  const std::size_t n = graph.num_qubits();
  if (from == blocked || to == blocked)
    return {};
  if (from == to)
    return {from};

  // Undirected weight: cheapest of the two directions.
  std::vector<double> w(n * n, kUnreachable);
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const Edge& e = graph.edges()[i];
    const double wi = graph.weight(i);
    w[e.control * n + e.target] = std::min(w[e.control * n + e.target], wi);
    w[e.target * n + e.control] = std::min(w[e.target * n + e.control], wi);
  }

  std::vector<double> dist(n, kUnreachable);
  std::vector<Qubit> prev(n, kNoHop);
  std::vector<bool> done(n, false);
  dist[from] = 0.0;
  for (;;) {
    Qubit u = kNoHop;
    for (Qubit v = 0; v < n; ++v)
      if (!done[v] && v != blocked && dist[v] != kUnreachable &&
          (u == kNoHop || dist[v] < dist[u]))
        u = v;
    if (u == kNoHop || u == to)
      break;
    done[u] = true;
    for (Qubit v : graph.neighbours(u)) {
      if (v == blocked || done[v])
        continue;
      const double alt = dist[u] + w[u * n + v];
      if (alt < dist[v]) {
        dist[v] = alt;
        prev[v] = u;
      }
    }
  }
  if (dist[to] == kUnreachable)
    return {};
  std::vector<Qubit> path{to};
  while (path.back() != from)
    path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

void walk(const std::vector<Qubit>& path, Configuration& config,
          std::vector<SwapPair>& swaps) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    swaps.emplace_back(path[i], path[i + 1]);
    config.swap_in_place(path[i], path[i + 1]);
  }
}

} // namespace

std::optional<RoutePlan> try_route_mi(const Configuration& config,
                                      Qubit control, Qubit target,
                                      const Placement& placement,
                                      const CouplingGraph& graph,
                                      const DistanceMatrix& dm) {
  if (control == target)
    throw std::invalid_argument("control and target must differ");
  const Qubit a = placement.control_end;
  const Qubit b = placement.target_end;
  if (!graph.adjacent(a, b))
    throw std::invalid_argument("placement endpoints are not a coupling edge");

  RoutePlan plan;
  plan.placement = placement;
  Configuration current = config;

  const auto control_path = dm.path(current.hw(control), a);
  if (control_path.empty())
    return std::nullopt;
  walk(control_path, current, plan.swaps);

  // The control now rests on `a`; the target must not push it off.
  const auto target_path =
      shortest_path_avoiding(graph, current.hw(target), b, a);
  if (target_path.empty())
    return std::nullopt;
  walk(target_path, current, plan.swaps);

  plan.interaction_index = plan.swaps.size();
  plan.direction = supports(graph, a, b);
  plan.added_hadamards = plan.direction == Support::Reversed ? 4 : 0;
  plan.final_edge = plan.direction == Support::Direct ? Edge{a, b} : Edge{b, a};
  plan.resulting_config = std::move(current);
  return plan;
}

RoutePlan route_mi(const Configuration& config, Qubit control, Qubit target,
                   const Placement& placement, const CouplingGraph& graph,
                   const DistanceMatrix& dm) {
  auto plan = try_route_mi(config, control, target, placement, graph, dm);
  if (!plan)
    throw RoutingError(RoutingError::Kind::NoPath,
                       "no path places qubits " + std::to_string(control) +
                           " and " + std::to_string(target) + " on vertices " +
                           std::to_string(placement.control_end) + " and " +
                           std::to_string(placement.target_end));
  return std::move(*plan);
}

RoutePlan route_mim(const Configuration& config, Qubit control, Qubit target,
                    const Placement& placement, const CouplingGraph& graph,
                    const DistanceMatrix& dm) {
  RoutePlan plan = route_mi(config, control, target, placement, graph, dm);
  const std::size_t d = plan.swaps.size();
  for (std::size_t i = d; i-- > 0;)
    plan.swaps.push_back(plan.swaps[i]);
  plan.interaction_index = d;
  plan.resulting_config = config;
  return plan;
}

std::vector<Gate> plan_gates(const RoutePlan& plan, const CouplingGraph& graph) {
  std::vector<Gate> out;
  for (std::size_t i = 0; i < plan.interaction_index; ++i)
    out.push_back(Gate::swap(plan.swaps[i].first, plan.swaps[i].second));
  for (const Gate& g : expand_cnot(graph, plan.placement.control_end,
                                   plan.placement.target_end))
    out.push_back(g);
  for (std::size_t i = plan.interaction_index; i < plan.swaps.size(); ++i)
    out.push_back(Gate::swap(plan.swaps[i].first, plan.swaps[i].second));
  return out;
}

} // namespace qroute
