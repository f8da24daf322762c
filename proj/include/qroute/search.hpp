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
#include <limits>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qroute/circuit.hpp"
#include "qroute/configuration.hpp"
#include "qroute/coupling.hpp"
#include "qroute/dag.hpp"

namespace qroute {

struct CompileOptions {
  // Cost of one inserted SWAP relative to one inserted Hadamard.
  double swap_weight = 3.0;
  // Count SWAP as three serial CNOTs when computing depth.
  bool expand_swap = false;
  // OpenMP threads for the exact search; 0 keeps the runtime default.
  int threads = 0;
};

/// Lexicographic compilation objective: weighted inserted gates, then depth.
struct Objective {
  double cost = 0.0;
  std::size_t depth = 0;

  friend bool operator<(const Objective& a, const Objective& b) {
    return a.cost < b.cost || (a.cost == b.cost && a.depth < b.depth);
  }
  friend bool operator==(const Objective&, const Objective&) = default;
};

struct Solution {
  Circuit compiled; // over hardware vertices
  std::size_t added_swaps = 0;
  std::size_t added_hadamards = 0;
  std::size_t depth = 0;
  Configuration initial_config;
  Configuration final_config;
  CnotOrder cnot_order;
  // Positions in `compiled` of every inserted SWAP and Hadamard.
  std::vector<std::size_t> inserted;
  bool incomplete = false;

  Objective objective(double swap_weight) const {
    return {swap_weight * static_cast<double>(added_swaps) +
                static_cast<double>(added_hadamards),
            depth};
  }

  friend bool operator==(const Solution&, const Solution&) = default;
};

inline constexpr std::size_t kAll = std::numeric_limits<std::size_t>::max();

struct SearchBudget {
  std::size_t max_initial_configs = kAll;
  std::size_t max_cnot_orders = kAll;
  std::size_t max_nodes = kAll;
  double time_limit_seconds = std::numeric_limits<double>::infinity();

  /// Throws std::invalid_argument unless every limit is positive.
  void validate() const;
};

/// Single pass in program order from `initial`. Every two-qubit gate is
/// placed on the edge chosen by select_best_edge and routed with MI.
/// Throws RoutingError when a gate cannot be placed.
Solution compile_greedy(const Circuit& circuit, const CouplingGraph& graph,
                        const Configuration& initial,
                        const CompileOptions& options = {});

/// compile_greedy from each of the first `max_configs` initial configurations
/// in lexicographic order; the first best one wins.
Solution compile_greedy_multistart(const Circuit& circuit,
                                   const CouplingGraph& graph,
                                   std::size_t max_configs,
                                   const CompileOptions& options = {});

/// Backtracking over initial configuration, CNOT order and the coupling edge
/// (with both endpoint assignments) of every two-qubit gate, pruned by the
/// best objective found so far. Subtrees (one per initial configuration and
/// CNOT order) are searched in parallel; the first minimal subtree wins, so
/// the result equals compile_exact_serial whenever the budget is not hit.
/// `fixed_initial` restricts the search to one starting placement.
Solution compile_exact(const Circuit& circuit, const CouplingGraph& graph,
                       const SearchBudget& budget = {},
                       const CompileOptions& options = {},
                       const std::optional<Configuration>& fixed_initial = {});

/// Single-threaded reference for compile_exact.
Solution compile_exact_serial(
    const Circuit& circuit, const CouplingGraph& graph,
    const SearchBudget& budget = {}, const CompileOptions& options = {},
    const std::optional<Configuration>& fixed_initial = {});

/// 2 * n * q! * v^n * n!, exactly.
boost::multiprecision::cpp_int search_space_size(std::size_t q, std::size_t n,
                                                 std::size_t v);

/// The `index`-th permutation of 0..n-1 in lexicographic order.
Configuration nth_configuration(std::size_t n, std::size_t index);

} // namespace qroute
