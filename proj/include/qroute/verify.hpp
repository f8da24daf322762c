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
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/configuration.hpp"
#include "qroute/coupling.hpp"
#include "qroute/search.hpp"

namespace qroute {

enum class ViolationKind { Remote, Direction, OutOfRange };

struct Violation {
  std::size_t gate_index = 0;
  ViolationKind kind = ViolationKind::Remote;
  std::string message;
};

struct StructuralReport {
  bool pass = true;
  std::vector<Violation> violations;
};

/// Every CNOT must lie on a coupling edge in its native direction; every SWAP
/// on an edge in either direction.
StructuralReport structural_check(const Circuit& compiled,
                                  const CouplingGraph& graph);

inline constexpr double kSemanticTolerance = 1e-9;

struct SemanticReport {
  bool pass = false;
  double max_amplitude_error = 0.0;
};

/// Largest amplitude difference between `lhs` and `rhs` over all basis
/// inputs. Logical qubit i of `lhs` enters `rhs` on wire input_map.hw(i) and
/// is read back from wire output_map.hw(i). Both circuits must have the same
/// width, at most kMaxSimulatedQubits. Basis inputs run in parallel.
double equivalence_error(const Circuit& lhs, const Circuit& rhs,
                         const Configuration& input_map,
                         const Configuration& output_map);

/// Single-threaded reference for equivalence_error, built on simulate_serial.
double equivalence_error_serial(const Circuit& lhs, const Circuit& rhs,
                                const Configuration& input_map,
                                const Configuration& output_map);

/// Compares `original` (padded to the device width) with the compiled circuit
/// of `solution`, un-permuting outputs through its final configuration.
SemanticReport semantic_check(const Circuit& original, const Solution& solution,
                              double tolerance = kSemanticTolerance);

std::string to_string(ViolationKind kind);

} // namespace qroute
