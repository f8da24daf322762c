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
#include <cstdint>
#include <utility>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

/// Wire-dependency DAG of a circuit. Node i is gate i; there is an edge u -> v
/// when v is the next gate after u on some shared wire.
class CircuitDag {
public:
  explicit CircuitDag(Circuit circuit);

  const Circuit& circuit() const { return circuit_; }
  std::size_t size() const { return circuit_.size(); }

  const std::vector<std::size_t>& successors(std::size_t node) const {
    return succ_[node];
  }
  const std::vector<std::size_t>& predecessors(std::size_t node) const {
    return pred_[node];
  }
  bool has_edge(std::size_t from, std::size_t to) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Gate indices of the CNOT nodes, in program order.
  const std::vector<std::size_t>& cnots() const { return cnots_; }

  /// True if `ancestor` precedes `node` through some dependency path.
  bool precedes(std::size_t ancestor, std::size_t node) const;

private:
  Circuit circuit_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
  std::vector<std::size_t> cnots_;
  // reach_[u] bit v set iff u precedes v
  std::vector<std::vector<std::uint64_t>> reach_;
};

CircuitDag build_dag(const Circuit& circuit);

/// A CNOT order is a sequence of gate indices naming every CNOT exactly once.
using CnotOrder = std::vector<std::size_t>;

struct OrderEnumeration {
  std::vector<CnotOrder> orders;
  bool truncated = false;
};

/// Distinct CNOT orders consistent with the full DAG, in lexicographic order
/// of gate index at each choice point, stopping after `limit` orders.
/// `truncated` is set when at least one more order exists.
OrderEnumeration enumerate_cnot_orders(const CircuitDag& dag,
                                       std::size_t limit);

bool is_valid_cnot_order(const CircuitDag& dag, const CnotOrder& order);

/// Full gate sequence that realises `order`: repeatedly emits the lowest-index
/// ready gate, where a CNOT is eligible only when it is next in `order`.
/// For the program order this reproduces the circuit unchanged.
std::vector<std::size_t> linearize(const CircuitDag& dag,
                                   const CnotOrder& order);

struct CnotChain {
  std::vector<Qubit> vertices;
  std::vector<std::uint8_t> weights;  // one per chain edge, 1 = CNOT-edge
  std::vector<std::size_t> cnot_index; // per CNOT-edge: position in the order
  std::vector<std::size_t> cnot_edge;  // per CNOT-edge: chain edge index
};

/// Builds the chain for `order`. Throws std::invalid_argument when `order` is
/// not a valid CNOT order of `dag`.
CnotChain build_cnot_chain(const CircuitDag& dag, const CnotOrder& order);

} // namespace qroute
