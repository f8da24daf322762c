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

#include "qroute/coupling.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "qroute/error.hpp"

namespace qroute {

CouplingGraph::CouplingGraph(std::size_t num_qubits, std::vector<Edge> edges,
                             std::vector<double> weights)
    : num_qubits_(num_qubits), edges_(std::move(edges)),
      weights_(std::move(weights)),
      directed_(num_qubits, std::vector<bool>(num_qubits, false)),
      adj_(num_qubits) {
  if (weights_.empty())
    weights_.assign(edges_.size(), 1.0);
  if (weights_.size() != edges_.size())
    throw std::invalid_argument("weights length does not match edges length");
  if (num_qubits_ > 0 && edges_.size() > num_qubits_ * (num_qubits_ - 1))
    throw std::invalid_argument("more edges than q(q-1)");

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.control >= num_qubits_ || e.target >= num_qubits_)
      throw std::invalid_argument("edge vertex out of range");
    if (e.control == e.target)
      throw std::invalid_argument("self-loop on vertex " +
                                  std::to_string(e.control));
    if (directed_[e.control][e.target])
      throw std::invalid_argument("duplicate edge " +
                                  std::to_string(e.control) + "->" +
                                  std::to_string(e.target));
    if (!(weights_[i] > 0.0) || weights_[i] == kUnreachable)
      throw std::invalid_argument("edge weights must be positive and finite");
    directed_[e.control][e.target] = true;
    if (!directed_[e.target][e.control]) {
      adj_[e.control].push_back(e.target);
      adj_[e.target].push_back(e.control);
    }
  }
  for (auto& n : adj_)
    std::sort(n.begin(), n.end());
}

CouplingGraph CouplingGraph::line(std::size_t num_qubits) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < num_qubits; ++i)
    edges.push_back({static_cast<Qubit>(i), static_cast<Qubit>(i + 1)});
  return CouplingGraph(num_qubits, std::move(edges));
}

bool CouplingGraph::has_edge(Qubit control, Qubit target) const {
  return control < num_qubits_ && target < num_qubits_ &&
         directed_[control][target];
}

bool CouplingGraph::adjacent(Qubit a, Qubit b) const {
  return has_edge(a, b) || has_edge(b, a);
}

CouplingGraph parse_coupling(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("coupling JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("num_qubits") ||
        !doc.contains("edges"))
      throw ParseError("coupling JSON needs \"num_qubits\" and \"edges\"");
    const auto n = doc.at("num_qubits").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("each edge must be a [control, target] pair");
      edges.push_back({e[0].get<Qubit>(), e[1].get<Qubit>()});
    }
    std::vector<double> weights;
    if (doc.contains("weights")) {
      weights = doc.at("weights").get<std::vector<double>>();
      if (weights.size() != edges.size())
        throw ParseError("\"weights\" length does not match \"edges\"");
    }
    return CouplingGraph(n, std::move(edges), std::move(weights));
  } catch (const json::exception& e) {
    throw ParseError(std::string("coupling JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("coupling graph: ") + e.what());
  }
}

std::string to_json(const CouplingGraph& graph) {
  nlohmann::ordered_json doc;
  doc["num_qubits"] = graph.num_qubits();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : graph.edges())
    edges.push_back({e.control, e.target});
  doc["edges"] = edges;
  doc["weights"] = graph.weights();
  return doc.dump();
}

DistanceMatrix::DistanceMatrix(std::size_t n, Directedness mode)
    : n_(n), mode_(mode), dist_(n * n, kUnreachable), next_(n * n, kNoHop) {
  for (std::size_t v = 0; v < n; ++v) {
    dist_[v * n + v] = 0.0;
    next_[v * n + v] = static_cast<Qubit>(v);
  }
}

std::vector<Qubit> DistanceMatrix::path(Qubit from, Qubit to) const {
  if (!reachable(from, to))
    return {};
  std::vector<Qubit> out{from};
  while (from != to) {
    from = next_hop(from, to);
    out.push_back(from);
  }
  return out;
}

namespace {

DistanceMatrix seed_distances(const CouplingGraph& graph, Directedness mode) {
  const std::size_t n = graph.num_qubits();
  DistanceMatrix dm(n, mode);
  double* dist = dm.dist_data();
  Qubit* next = dm.next_data();
  auto relax = [&](Qubit a, Qubit b, double w) {
    if (w < dist[a * n + b]) {
      dist[a * n + b] = w;
      next[a * n + b] = b;
    }
  };
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const Edge& e = graph.edges()[i];
    relax(e.control, e.target, graph.weight(i));
    if (mode == Directedness::Undirected)
      relax(e.target, e.control, graph.weight(i));
  }
  return dm;
}

// Relaxing through pivot k never changes row k or column k, so rows are
// independent within one pivot step.
inline void relax_row(double* dist, Qubit* next, std::size_t n, std::size_t k,
                      std::size_t i) {
  const double dik = dist[i * n + k];
  if (dik == kUnreachable)
    return;
  const double* row_k = dist + k * n;
  double* row_i = dist + i * n;
  Qubit* hop_i = next + i * n;
  const Qubit hop_ik = hop_i[k];
  for (std::size_t j = 0; j < n; ++j) {
    const double through = dik + row_k[j];
    if (through < row_i[j]) {
      row_i[j] = through;
      hop_i[j] = hop_ik;
    }
  }
}

} // namespace

DistanceMatrix all_pairs_shortest_paths(const CouplingGraph& graph,
                                        Directedness mode) {
  DistanceMatrix dm = seed_distances(graph, mode);
  const std::size_t n = dm.size();
  double* dist = dm.dist_data();
  Qubit* next = dm.next_data();
  const auto rows = static_cast<std::ptrdiff_t>(n);
  for (std::size_t k = 0; k < n; ++k) {
#pragma omp parallel for schedule(static) if (n >= 64)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
      relax_row(dist, next, n, k, static_cast<std::size_t>(i));
  }
  return dm;
}

DistanceMatrix all_pairs_shortest_paths_serial(const CouplingGraph& graph,
                                               Directedness mode) {
  DistanceMatrix dm = seed_distances(graph, mode);
  const std::size_t n = dm.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      relax_row(dm.dist_data(), dm.next_data(), n, k, i);
  return dm;
}

Support supports(const CouplingGraph& graph, Qubit control, Qubit target) {
  if (graph.has_edge(control, target))
    return Support::Direct;
  if (graph.has_edge(target, control))
    return Support::Reversed;
  return Support::None;
}

std::vector<Gate> expand_cnot(const CouplingGraph& graph, Qubit control,
                              Qubit target) {
  switch (supports(graph, control, target)) {
  case Support::Direct:
    return {Gate::cnot(control, target)};
  case Support::Reversed:
    return {Gate::single(GateKind::H, control),
            Gate::single(GateKind::H, target), Gate::cnot(target, control),
            Gate::single(GateKind::H, control),
            Gate::single(GateKind::H, target)};
  case Support::None:
    break;
  }
  throw RoutingError(RoutingError::Kind::NoEdge,
                     "no coupling edge between " + std::to_string(control) +
                         " and " + std::to_string(target));
}

} // namespace qroute
