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
#include <span>
#include <string>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

/// Placement of circuit qubits on hardware vertices. `to_hw()[i]` is the
/// vertex holding circuit qubit i; `to_circ()` is the inverse, i.e. the
/// wire-to-qubit reading of the same placement.
class Configuration {
public:
  Configuration() = default;

  static Configuration identity(std::size_t n);
  /// Throws std::invalid_argument unless `to_hw` is a permutation of 0..n-1.
  static Configuration from_to_hw(std::vector<Qubit> to_hw);
  static Configuration from_to_circ(std::vector<Qubit> to_circ);

  std::size_t size() const { return to_hw_.size(); }
  Qubit hw(Qubit circuit_qubit) const { return to_hw_[circuit_qubit]; }
  Qubit circ(Qubit vertex) const { return to_circ_[vertex]; }
  std::span<const Qubit> to_hw() const { return to_hw_; }
  std::span<const Qubit> to_circ() const { return to_circ_; }

  /// Exchanges the circuit qubits held by two hardware vertices.
  Configuration swapped(Qubit hw_a, Qubit hw_b) const;
  void swap_in_place(Qubit hw_a, Qubit hw_b);

  /// Lexicographic successor of to_hw; false after the last permutation.
  bool next_permutation();

  std::string to_string() const; // "[2,1,0]" over to_hw

  friend bool operator==(const Configuration&, const Configuration&) = default;

private:
  std::vector<Qubit> to_hw_;
  std::vector<Qubit> to_circ_;
};

inline Configuration apply_swap(const Configuration& config, Qubit hw_a,
                                Qubit hw_b) {
  return config.swapped(hw_a, hw_b);
}

/// n! as an unsigned count, saturating at SIZE_MAX.
std::size_t factorial_saturating(std::size_t n);

} // namespace qroute
