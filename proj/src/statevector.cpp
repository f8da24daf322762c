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

#include "qroute/statevector.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qroute {
namespace {

using Matrix2 = std::array<Amplitude, 4>; // row-major

Matrix2 matrix_of(GateKind kind) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::numbers::sqrt2;
  const Amplitude t = std::polar(1.0, std::numbers::pi / 4);
  switch (kind) {
  case GateKind::H: return {r, r, r, -r};
  case GateKind::T: return {1.0, 0.0, 0.0, t};
  case GateKind::Tdg: return {1.0, 0.0, 0.0, std::conj(t)};
  case GateKind::S: return {1.0, 0.0, 0.0, 1i};
  case GateKind::Sdg: return {1.0, 0.0, 0.0, -1i};
  case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
  case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
  case GateKind::CNOT:
  case GateKind::SWAP: break;
  }
  throw std::invalid_argument("no 2x2 matrix for a two-qubit gate");
}

void check_size(std::size_t num_qubits) {
  if (num_qubits > kMaxSimulatedQubits)
    throw std::invalid_argument("simulation limited to " +
                                std::to_string(kMaxSimulatedQubits) +
                                " qubits, got " + std::to_string(num_qubits));
}

constexpr std::size_t kParallelDimension = std::size_t{1} << 10;

// Index of the k-th basis state whose bits at `lo` < `hi` are both zero.
inline std::size_t insert_two_zeros(std::size_t k, std::size_t lo,
                                    std::size_t hi) {
  const std::size_t lo_mask = (std::size_t{1} << lo) - 1;
  k = ((k & ~lo_mask) << 1) | (k & lo_mask);
  const std::size_t hi_mask = (std::size_t{1} << hi) - 1;
  return ((k & ~hi_mask) << 1) | (k & hi_mask);
}

} // namespace

StateVector::StateVector(std::size_t num_qubits)
    : num_qubits_(num_qubits) {
  check_size(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, 0.0);
  amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dimension())
    throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Amplitude& a : amps_)
    sum += std::norm(a);
  return std::sqrt(sum);
}

void apply_gate(StateVector& state, const Gate& gate) {
  Amplitude* amps = state.amplitudes().data();
  const std::size_t dim = state.dimension();
  const bool parallel = dim >= kParallelDimension;

  if (gate.kind == GateKind::CNOT || gate.kind == GateKind::SWAP) {
    const std::size_t a = gate.operands[0];
    const std::size_t b = gate.operands[1];
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    const std::size_t bit_a = std::size_t{1} << a;
    const std::size_t bit_b = std::size_t{1} << b;
    const auto quarter = static_cast<std::ptrdiff_t>(dim / 4);
    const bool is_cnot = gate.kind == GateKind::CNOT;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t k = 0; k < quarter; ++k) {
      const std::size_t base =
          insert_two_zeros(static_cast<std::size_t>(k), lo, hi);
      if (is_cnot) // control a set: flip target b
        std::swap(amps[base | bit_a], amps[base | bit_a | bit_b]);
      else
        std::swap(amps[base | bit_a], amps[base | bit_b]);
    }
    return;
  }

  const Matrix2 m = matrix_of(gate.kind);
  const std::size_t q = gate.operands[0];
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t low_mask = bit - 1;
  const auto half = static_cast<std::ptrdiff_t>(dim / 2);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t k = 0; k < half; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const std::size_t i0 = ((uk & ~low_mask) << 1) | (uk & low_mask);
    const std::size_t i1 = i0 | bit;
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  }
}

StateVector simulate(const Circuit& circuit, StateVector state) {
  check_size(circuit.num_qubits());
  if (circuit.num_qubits() != state.num_qubits())
    throw std::invalid_argument("state and circuit qubit counts differ");
  for (const Gate& g : circuit.gates())
    apply_gate(state, g);
  return state;
}

StateVector simulate_serial(const Circuit& circuit, const StateVector& input) {
  check_size(circuit.num_qubits());
  if (circuit.num_qubits() != input.num_qubits())
    throw std::invalid_argument("state and circuit qubit counts differ");

  StateVector cur = input;
  StateVector next(input.num_qubits());
  for (const Gate& g : circuit.gates()) {
    for (std::size_t i = 0; i < cur.dimension(); ++i) {
      const auto bit_of = [i](std::size_t q) { return (i >> q) & 1U; };
      switch (g.kind) {
      case GateKind::CNOT: {
        const std::size_t src =
            bit_of(g.control()) ? i ^ (std::size_t{1} << g.target()) : i;
        next[i] = cur[src];
        break;
      }
      case GateKind::SWAP: {
        const std::size_t a = g.operands[0];
        const std::size_t b = g.operands[1];
        std::size_t src = i & ~((std::size_t{1} << a) | (std::size_t{1} << b));
        src |= bit_of(a) << b;
        src |= bit_of(b) << a;
        next[i] = cur[src];
        break;
      }
      default: {
        const Matrix2 m = matrix_of(g.kind);
        const std::size_t q = g.operands[0];
        const std::size_t row = bit_of(q);
        const std::size_t i0 = i & ~(std::size_t{1} << q);
        const std::size_t i1 = i0 | (std::size_t{1} << q);
        next[i] = m[row * 2] * cur[i0] + m[row * 2 + 1] * cur[i1];
      }
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

} // namespace qroute
