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

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/configuration.hpp"
#include "qroute/coupling.hpp"

namespace qroute {

/// True iff the two circuit qubits sit on vertices with no edge in either
/// direction. A wrong-direction edge is repaired with Hadamards, not SWAPs,
/// so it does not make the CNOT remote.
bool is_remote(const Configuration& config, Qubit control, Qubit target,
               const CouplingGraph& graph);

/// Where a two-qubit gate is executed: the control's state is moved to
/// `control_end`, the target's to `target_end`. The two ends are adjacent.
struct Placement {
  Qubit control_end = 0;
  Qubit target_end = 0;
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct EdgeChoice {
  std::size_t edge_index = 0;
  Placement placement;
  double cost = 0.0;
};

/// Picks the coupling edge whose endpoints are cheapest to reach from the
/// current locations of `control` and `target`. Each edge is tried with both
/// endpoint assignments; the native-direction assignment wins a cost tie, and
/// among equally cheap edges the last one in the edge list is returned.
/// Throws RoutingError(AllUnreachable) if no edge has finite cost.
EdgeChoice select_best_edge(const Configuration& config, Qubit control,
                            Qubit target, const CouplingGraph& graph,
                            const DistanceMatrix& dm);

/// Cost of every (edge, assignment) pair, for inspection and tests.
double placement_cost(const Configuration& config, Qubit control, Qubit target,
                      const Placement& placement, const DistanceMatrix& dm);

using SwapPair = std::pair<Qubit, Qubit>;

struct RoutePlan {
  std::vector<SwapPair> swaps;
  std::size_t interaction_index = 0; // swaps applied before the CNOT
  std::size_t added_hadamards = 0;
  Edge final_edge;                   // coupling edge the CNOT runs on
  Support direction = Support::Direct;
  Placement placement;
  Configuration resulting_config;
};

/// Move-interact: one SWAP per hop moves the control onto
/// `placement.control_end`, then the target onto `placement.target_end`
/// along a shortest path that avoids the control's vertex. The configuration
/// is left in its moved state. Throws RoutingError(NoPath).
RoutePlan route_mi(const Configuration& config, Qubit control, Qubit target,
                   const Placement& placement, const CouplingGraph& graph,
                   const DistanceMatrix& dm);

/// route_mi without the exception: nullopt where route_mi throws NoPath.
std::optional<RoutePlan> try_route_mi(const Configuration& config,
                                      Qubit control, Qubit target,
                                      const Placement& placement,
                                      const CouplingGraph& graph,
                                      const DistanceMatrix& dm);

/// Move-interact-move: the MI swaps, the CNOT, then the same swaps in reverse,
/// which restores the input configuration.
RoutePlan route_mim(const Configuration& config, Qubit control, Qubit target,
                    const Placement& placement, const CouplingGraph& graph,
                    const DistanceMatrix& dm);

/// Hardware gates realising CNOT(control, target) through `plan`.
std::vector<Gate> plan_gates(const RoutePlan& plan, const CouplingGraph& graph);

/// Shortest path over the undirected graph that never enters `blocked`.
/// Empty when `to` is unreachable.
std::vector<Qubit> shortest_path_avoiding(const CouplingGraph& graph,
                                          Qubit from, Qubit to, Qubit blocked);

} // namespace qroute
