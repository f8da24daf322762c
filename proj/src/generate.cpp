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

#include "qroute/generate.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace qroute {
namespace {

class Draw {
public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

private:
  std::mt19937_64 rng_;
};

constexpr GateKind kSingles[] = {GateKind::H,   GateKind::T, GateKind::Tdg,
                                 GateKind::S,   GateKind::Sdg, GateKind::X,
                                 GateKind::Z};

} // namespace

Circuit random_circuit(std::uint64_t seed, const RandomCircuitSpec& spec) {
  if (spec.num_cnots > 0 && spec.num_qubits < 2)
    throw std::invalid_argument("CNOTs need at least two qubits");
  if (spec.num_single > 0 && spec.num_qubits == 0)
    throw std::invalid_argument("gates need at least one qubit");
  Draw draw(seed);
  Circuit c(spec.num_qubits);
  std::size_t cnots = spec.num_cnots;
  std::size_t singles = spec.num_single;
  while (cnots + singles > 0) {
    if (draw.below(cnots + singles) < cnots) {
      const auto a = static_cast<Qubit>(draw.below(spec.num_qubits));
      auto b = static_cast<Qubit>(draw.below(spec.num_qubits - 1));
      if (b >= a)
        ++b;
      c.append(Gate::cnot(a, b));
      --cnots;
    } else {
      const GateKind kind = kSingles[draw.below(std::size(kSingles))];
      c.append(Gate::single(kind, static_cast<Qubit>(draw.below(spec.num_qubits))));
      --singles;
    }
  }
  return c;
}

CouplingGraph random_coupling(std::uint64_t seed, std::size_t num_qubits,
                              std::size_t extra_edges) {
  Draw draw(seed);
  std::vector<std::vector<bool>> used(num_qubits, std::vector<bool>(num_qubits));
  std::vector<Edge> edges;
  auto add = [&](Qubit a, Qubit b) {
    if (draw.below(2))
      std::swap(a, b);
    used[a][b] = used[b][a] = true;
    edges.push_back({a, b});
  };
  for (std::size_t v = 1; v < num_qubits; ++v)
    add(static_cast<Qubit>(draw.below(v)), static_cast<Qubit>(v));
  const std::size_t max_pairs = num_qubits * (num_qubits - (num_qubits ? 1 : 0)) / 2;
  for (std::size_t k = 0; k < extra_edges && edges.size() < max_pairs;) {
    const auto a = static_cast<Qubit>(draw.below(num_qubits));
    const auto b = static_cast<Qubit>(draw.below(num_qubits));
    if (a == b || used[a][b])
      continue;
    add(a, b);
    ++k;
  }
  return CouplingGraph(num_qubits, std::move(edges));
}

} // namespace qroute
