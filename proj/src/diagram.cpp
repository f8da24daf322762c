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

#include "qroute/diagram.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "qroute/configuration.hpp"

namespace qroute {

std::string export_search_diagram(const Circuit& circuit,
                                  const CouplingGraph& graph,
                                  const CnotOrder& order,
                                  std::size_t q_limit) {
  const std::size_t q = graph.num_qubits();
  if (q > q_limit)
    throw std::invalid_argument("search diagram for " + std::to_string(q) +
                                " qubits exceeds the limit of " +
                                std::to_string(q_limit));
  if (circuit.num_qubits() > q)
    throw std::invalid_argument("circuit has more qubits than the device");

  const CircuitDag dag(circuit.padded(q));
  const CnotChain chain = build_cnot_chain(dag, order);
  const std::size_t rings = chain.vertices.empty() ? 1 : chain.vertices.size();

  std::vector<Configuration> configs{Configuration::identity(q)};
  for (Configuration c = configs.front(); c.next_permutation();)
    configs.push_back(c);
  const std::size_t per_ring = configs.size();

  auto node = [](std::size_t ring, std::size_t k) {
    return "r" + std::to_string(ring) + "_p" + std::to_string(k);
  };

  std::ostringstream dot;
  dot << "graph search_diagram {\n"
      << "  // " << rings << " rings x " << per_ring << " configurations\n"
      << "  node [shape=hexagon];\n";
  for (std::size_t r = 0; r < rings; ++r) {
    dot << "  subgraph cluster_ring" << r << " {\n";
    dot << "    label=\"ring " << r;
    if (!chain.vertices.empty())
      dot << " wire " << chain.vertices[r];
    dot << "\";\n";
    for (std::size_t k = 0; k < per_ring; ++k)
      dot << "    " << node(r, k) << " [label=\"p" << k << " "
          << configs[k].to_string() << "\"];\n";
    if (per_ring == 2) {
      dot << "    " << node(r, 0) << " -- " << node(r, 1) << ";\n";
    } else if (per_ring > 2) {
      for (std::size_t k = 0; k < per_ring; ++k)
        dot << "    " << node(r, k) << " -- " << node(r, (k + 1) % per_ring)
            << ";\n";
    }
    dot << "  }\n";
  }
  for (std::size_t r = 0; r + 1 < rings; ++r)
    for (std::size_t k = 0; k < per_ring; ++k)
      dot << "  " << node(r, k) << " -- " << node(r + 1, k) << " [label=\""
          << static_cast<int>(chain.weights[r]) << "\"];\n";
  dot << "}\n";
  return dot.str();
}

} // namespace qroute
