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
#include <string>

#include "qroute/circuit.hpp"
#include "qroute/coupling.hpp"
#include "qroute/dag.hpp"

namespace qroute {

/// Search diagram as a Graphviz document: one ring holding all q!
/// configurations per CNOT-chain vertex (the innermost ring is the initial
/// one), consecutive configurations on a ring joined in a cycle, and radial
/// edges between matching configurations of neighbouring rings labelled with
/// the chain edge weight. q is the device size. Throws std::invalid_argument
/// when q exceeds `q_limit`.
std::string export_search_diagram(const Circuit& circuit,
                                  const CouplingGraph& graph,
                                  const CnotOrder& order,
                                  std::size_t q_limit = 4);

} // namespace qroute
