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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxSimulatedQubits = 12;

/// Dense state over n qubits; qubit i is bit i of the basis index.
class StateVector {
public:
  explicit StateVector(std::size_t num_qubits);

  static StateVector basis(std::size_t num_qubits, std::uint64_t index);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::span<Amplitude> amplitudes() { return amps_; }
  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
  Amplitude& operator[](std::size_t i) { return amps_[i]; }

  double norm() const;

private:
  std::size_t num_qubits_;
  std::vector<Amplitude> amps_;
};

/// Applies `circuit` gate by gate. Large states are updated in parallel.
/// Throws std::invalid_argument above kMaxSimulatedQubits qubits or on a
/// qubit-count mismatch.
StateVector simulate(const Circuit& circuit, StateVector state);

/// Reference simulator: rebuilds the full vector per gate from the gate's
/// matrix elements, single-threaded.
StateVector simulate_serial(const Circuit& circuit, const StateVector& state);

/// In-place application of one gate; the parallel kernel behind simulate().
void apply_gate(StateVector& state, const Gate& gate);

} // namespace qroute
