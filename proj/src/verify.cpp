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

#include "qroute/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "qroute/statevector.hpp"

namespace qroute {

std::string to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::Remote: return "remote";
  case ViolationKind::Direction: return "direction";
  case ViolationKind::OutOfRange: return "out_of_range";
  }
  return "unknown";
}

StructuralReport structural_check(const Circuit& compiled,
                                  const CouplingGraph& graph) {
  StructuralReport report;
  for (std::size_t i = 0; i < compiled.size(); ++i) {
    const Gate& g = compiled[i];
    const auto in_range = [&](Qubit v) { return v < graph.num_qubits(); };
    if (!in_range(g.operands[0]) ||
        (g.is_two_qubit() && !in_range(g.operands[1]))) {
      report.violations.push_back(
          {i, ViolationKind::OutOfRange, "operand outside the coupling graph"});
      continue;
    }
    if (!g.is_two_qubit())
      continue;
    const Qubit a = g.operands[0];
    const Qubit b = g.operands[1];
    const std::string where = std::string(mnemonic(g.kind)) + " " +
                              std::to_string(a) + "," + std::to_string(b);
    if (g.kind == GateKind::CNOT) {
      if (graph.has_edge(a, b))
        continue;
      if (graph.has_edge(b, a))
        report.violations.push_back(
            {i, ViolationKind::Direction, where + " against edge direction"});
      else
        report.violations.push_back(
            {i, ViolationKind::Remote, where + " on non-adjacent vertices"});
    } else if (!graph.adjacent(a, b)) {
      report.violations.push_back(
          {i, ViolationKind::Remote, where + " on non-adjacent vertices"});
    }
  }
  report.pass = report.violations.empty();
  return report;
}

namespace {

std::size_t relabel(std::size_t index, const Configuration& map) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if ((index >> i) & 1U)
      out |= std::size_t{1} << map.hw(static_cast<Qubit>(i));
  return out;
}

void check_widths(const Circuit& lhs, const Circuit& rhs,
                  const Configuration& input_map,
                  const Configuration& output_map) {
  const std::size_t n = lhs.num_qubits();
  if (rhs.num_qubits() != n || input_map.size() != n || output_map.size() != n)
    throw std::invalid_argument("equivalence check width mismatch");
  if (n > kMaxSimulatedQubits)
    throw std::invalid_argument("equivalence check limited to " +
                                std::to_string(kMaxSimulatedQubits) +
                                " qubits");
}

template <typename Sim>
double basis_error(const Circuit& lhs, const Circuit& rhs,
                   const Configuration& input_map,
                   const Configuration& output_map, std::size_t x, Sim sim) {
  const std::size_t n = lhs.num_qubits();
  const StateVector expect = sim(lhs, StateVector::basis(n, x));
  const StateVector got = sim(rhs, StateVector::basis(n, relabel(x, input_map)));
  double err = 0.0;
  for (std::size_t z = 0; z < expect.dimension(); ++z)
    err = std::max(err, std::abs(expect[z] - got[relabel(z, output_map)]));
  return err;
}

} // namespace

double equivalence_error(const Circuit& lhs, const Circuit& rhs,
                         const Configuration& input_map,
                         const Configuration& output_map) {
  check_widths(lhs, rhs, input_map, output_map);
  const auto dim = static_cast<std::ptrdiff_t>(std::size_t{1}
                                               << lhs.num_qubits());
  const auto sim = [](const Circuit& c, StateVector s) {
    return simulate(c, std::move(s));
  };
  double err = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : err)
  for (std::ptrdiff_t x = 0; x < dim; ++x)
    err = std::max(err, basis_error(lhs, rhs, input_map, output_map,
                                    static_cast<std::size_t>(x), sim));
  return err;
}

double equivalence_error_serial(const Circuit& lhs, const Circuit& rhs,
                                const Configuration& input_map,
                                const Configuration& output_map) {
  check_widths(lhs, rhs, input_map, output_map);
  const std::size_t dim = std::size_t{1} << lhs.num_qubits();
  const auto sim = [](const Circuit& c, const StateVector& s) {
    return simulate_serial(c, s);
  };
  double err = 0.0;
  for (std::size_t x = 0; x < dim; ++x)
    err = std::max(err, basis_error(lhs, rhs, input_map, output_map, x, sim));
  return err;
}

SemanticReport semantic_check(const Circuit& original, const Solution& solution,
                              double tolerance) {
  const std::size_t width = solution.compiled.num_qubits();
  if (original.num_qubits() > width)
    throw std::invalid_argument("original circuit wider than compiled circuit");
  SemanticReport report;
  report.max_amplitude_error =
      equivalence_error(original.padded(width), solution.compiled,
                        solution.initial_config, solution.final_config);
  report.pass = report.max_amplitude_error < tolerance;
  return report;
}

} // namespace qroute
