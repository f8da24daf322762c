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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

namespace qroute {

/// Wire index. Depending on context this addresses a circuit qubit or a
/// hardware vertex of the coupling graph.
using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { H, T, Tdg, S, Sdg, X, Z, CNOT, SWAP };

inline constexpr std::array<GateKind, 9> kAllGateKinds = {
    GateKind::H,  GateKind::T, GateKind::Tdg,  GateKind::S,   GateKind::Sdg,
    GateKind::X,  GateKind::Z, GateKind::CNOT, GateKind::SWAP};

constexpr std::size_t arity(GateKind kind) {
  return (kind == GateKind::CNOT || kind == GateKind::SWAP) ? 2 : 1;
}

/// QASM mnemonic ("h", "cx", "swap", ...).
std::string_view mnemonic(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  // For CNOT: {control, target}. For single-qubit gates only operands[0] is
  // meaningful and operands[1] is zero.
  std::array<Qubit, 2> operands{0, 0};

  static Gate single(GateKind kind, Qubit wire);
  static Gate cnot(Qubit control, Qubit target);
  static Gate swap(Qubit a, Qubit b);

  std::size_t num_operands() const { return arity(kind); }
  bool is_two_qubit() const { return num_operands() == 2; }
  bool touches(Qubit wire) const;

  Qubit control() const { return operands[0]; }
  Qubit target() const { return operands[1]; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a fixed number of wires. Validated on construction
/// and on every append; immutable through the const interface.
class Circuit {
public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}
  Circuit(std::size_t num_qubits, std::vector<Gate> gates);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  void append(const Gate& gate);

  /// Same gates on `num_qubits` >= current wires; the new wires are idle.
  Circuit padded(std::size_t num_qubits) const;

  std::size_t count(GateKind kind) const;
  std::vector<std::size_t> cnot_indices() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  void check(const Gate& gate) const;

  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
};

struct Metrics {
  std::map<GateKind, std::size_t> counts;
  std::size_t total = 0;
  std::size_t depth = 0;
};

/// Gate counts and depth (longest path of the wire-dependency DAG, one step
/// per gate). With `expand_swap`, every SWAP contributes three CNOTs to the
/// counts and three serial steps to the depth.
Metrics metrics(const Circuit& circuit, bool expand_swap = false);

/// Depth contribution of a single gate under the same convention as metrics().
inline std::size_t gate_depth(const Gate& gate, bool expand_swap) {
  return (expand_swap && gate.kind == GateKind::SWAP) ? 3 : 1;
}

} // namespace qroute
