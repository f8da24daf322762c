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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

struct Edge {
  Qubit control = 0;
  Qubit target = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed coupling graph of a device. Edge order is kept exactly as given:
/// edge selection breaks ties by list position.
class CouplingGraph {
public:
  CouplingGraph() = default;
  CouplingGraph(std::size_t num_qubits, std::vector<Edge> edges,
                std::vector<double> weights = {});

  /// Undirected line 0-1-...-(n-1) with edges (i, i+1).
  static CouplingGraph line(std::size_t num_qubits);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t edge_index) const { return weights_[edge_index]; }

  bool has_edge(Qubit control, Qubit target) const;
  /// Adjacent in either direction.
  bool adjacent(Qubit a, Qubit b) const;
  /// Undirected neighbours of `v`, ascending.
  const std::vector<Qubit>& neighbours(Qubit v) const { return adj_[v]; }

private:
  std::size_t num_qubits_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::vector<bool>> directed_;
  std::vector<std::vector<Qubit>> adj_;
};

/// Reads {"num_qubits": N, "edges": [[c,t], ...], "weights": [w, ...]}.
CouplingGraph parse_coupling(std::string_view text);
std::string to_json(const CouplingGraph& graph);

enum class Directedness { Directed, Undirected };

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();
inline constexpr Qubit kNoHop = std::numeric_limits<Qubit>::max();

class DistanceMatrix {
public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, Directedness mode);

  std::size_t size() const { return n_; }
  Directedness mode() const { return mode_; }

  double dist(Qubit from, Qubit to) const { return dist_[from * n_ + to]; }
  Qubit next_hop(Qubit from, Qubit to) const { return next_[from * n_ + to]; }
  bool reachable(Qubit from, Qubit to) const {
    return dist(from, to) != kUnreachable;
  }

  /// Vertex sequence from `from` to `to` inclusive; empty if unreachable.
  std::vector<Qubit> path(Qubit from, Qubit to) const;

  double* dist_data() { return dist_.data(); }
  Qubit* next_data() { return next_.data(); }

  friend bool operator==(const DistanceMatrix&,
                         const DistanceMatrix&) = default;

private:
  std::size_t n_ = 0;
  Directedness mode_ = Directedness::Undirected;
  std::vector<double> dist_;
  std::vector<Qubit> next_;
};

/// Floyd-Warshall over edge weights. Undirected mode adds every edge's reverse
/// with the same weight first. Rows are relaxed in parallel for each pivot.
DistanceMatrix all_pairs_shortest_paths(
    const CouplingGraph& graph, Directedness mode = Directedness::Undirected);

/// Single-threaded reference for all_pairs_shortest_paths; same result.
DistanceMatrix all_pairs_shortest_paths_serial(
    const CouplingGraph& graph, Directedness mode = Directedness::Undirected);

enum class Support { Direct, Reversed, None };

Support supports(const CouplingGraph& graph, Qubit control, Qubit target);

/// Native gate sequence for CNOT(control, target) on adjacent vertices.
/// Against the edge direction the CNOT is conjugated by Hadamards on both
/// wires. Throws RoutingError(NoEdge) when the vertices are not adjacent.
std::vector<Gate> expand_cnot(const CouplingGraph& graph, Qubit control,
                              Qubit target);

} // namespace qroute
