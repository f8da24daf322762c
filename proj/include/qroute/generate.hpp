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

#include "qroute/circuit.hpp"
#include "qroute/coupling.hpp"

namespace qroute {

struct RandomCircuitSpec {
  std::size_t num_qubits = 3;
  std::size_t num_cnots = 2;
  // Single-qubit gates drawn from {h, t, tdg, s, sdg, x, z}, interleaved.
  std::size_t num_single = 0;
};

/// Seeded random circuit. The same seed gives the same circuit on every
/// platform (raw mt19937_64 draws, no library distributions).
Circuit random_circuit(std::uint64_t seed, const RandomCircuitSpec& spec);

/// Seeded random connected coupling graph: a random spanning tree plus
/// `extra_edges` further pairs, each with a random direction.
CouplingGraph random_coupling(std::uint64_t seed, std::size_t num_qubits,
                              std::size_t extra_edges);

} // namespace qroute
