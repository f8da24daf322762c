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

#include "qroute/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qroute/error.hpp"

namespace qroute {

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : std::to_string(line) + ":" +
                                         std::to_string(column) + ": " +
                                         message),
      line_(line), column_(column) {}

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
  case GateKind::H: return "h";
  case GateKind::T: return "t";
  case GateKind::Tdg: return "tdg";
  case GateKind::S: return "s";
  case GateKind::Sdg: return "sdg";
  case GateKind::X: return "x";
  case GateKind::Z: return "z";
  case GateKind::CNOT: return "cx";
  case GateKind::SWAP: return "swap";
  }
  return "?";
}

Gate Gate::single(GateKind kind, Qubit wire) {
  if (arity(kind) != 1)
    throw std::invalid_argument("two-qubit gate kind passed to Gate::single");
  return Gate{kind, {wire, 0}};
}

Gate Gate::cnot(Qubit control, Qubit target) {
  return Gate{GateKind::CNOT, {control, target}};
}

Gate Gate::swap(Qubit a, Qubit b) { return Gate{GateKind::SWAP, {a, b}}; }

bool Gate::touches(Qubit wire) const {
  return operands[0] == wire || (is_two_qubit() && operands[1] == wire);
}

Circuit::Circuit(std::size_t num_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
  for (const Gate& g : gates_)
    check(g);
}

void Circuit::check(const Gate& gate) const {
  for (std::size_t i = 0; i < gate.num_operands(); ++i) {
    if (gate.operands[i] >= num_qubits_)
      throw std::out_of_range("gate operand " +
                              std::to_string(gate.operands[i]) +
                              " out of range for " +
                              std::to_string(num_qubits_) + " qubits");
  }
  if (gate.is_two_qubit() && gate.operands[0] == gate.operands[1])
    throw std::invalid_argument("two-qubit gate with identical operands");
  if (!gate.is_two_qubit() && gate.operands[1] != 0)
    throw std::invalid_argument("single-qubit gate with a second operand");
}

void Circuit::append(const Gate& gate) {
  check(gate);
  gates_.push_back(gate);
}

Circuit Circuit::padded(std::size_t num_qubits) const {
  if (num_qubits < num_qubits_)
    throw std::invalid_argument("cannot pad a circuit to fewer qubits");
  Circuit out(num_qubits);
  out.gates_ = gates_;
  return out;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [kind](const Gate& g) { return g.kind == kind; }));
}

std::vector<std::size_t> Circuit::cnot_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gates_.size(); ++i)
    if (gates_[i].kind == GateKind::CNOT)
      out.push_back(i);
  return out;
}

Metrics metrics(const Circuit& circuit, bool expand_swap) {
  Metrics m;
  for (GateKind k : kAllGateKinds)
    m.counts[k] = 0;

  std::vector<std::size_t> wire_depth(circuit.num_qubits(), 0);
  for (const Gate& g : circuit.gates()) {
    if (expand_swap && g.kind == GateKind::SWAP) {
      m.counts[GateKind::CNOT] += 3;
      m.total += 3;
    } else {
      ++m.counts[g.kind];
      ++m.total;
    }
    std::size_t start = wire_depth[g.operands[0]];
    if (g.is_two_qubit())
      start = std::max(start, wire_depth[g.operands[1]]);
    const std::size_t end = start + gate_depth(g, expand_swap);
    wire_depth[g.operands[0]] = end;
    if (g.is_two_qubit())
      wire_depth[g.operands[1]] = end;
  }
  if (!wire_depth.empty())
    m.depth = *std::max_element(wire_depth.begin(), wire_depth.end());
  return m;
}

} // namespace qroute
