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

#include "qroute/dag.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace qroute {
namespace {

bool test_bit(const std::vector<std::uint64_t>& bits, std::size_t i) {
  return (bits[i / 64] >> (i % 64)) & 1U;
}

void set_bit(std::vector<std::uint64_t>& bits, std::size_t i) {
  bits[i / 64] |= std::uint64_t{1} << (i % 64);
}

} // namespace

CircuitDag::CircuitDag(Circuit circuit)
    : circuit_(std::move(circuit)), succ_(circuit_.size()),
      pred_(circuit_.size()) {
  const std::size_t n = circuit_.size();
  std::vector<std::optional<std::size_t>> last(circuit_.num_qubits());

  for (std::size_t i = 0; i < n; ++i) {
    const Gate& g = circuit_[i];
    if (g.kind == GateKind::CNOT)
      cnots_.push_back(i);
    for (std::size_t k = 0; k < g.num_operands(); ++k) {
      auto& prev = last[g.operands[k]];
      if (prev && !has_edge(*prev, i)) {
        succ_[*prev].push_back(i);
        pred_[i].push_back(*prev);
      }
      prev = i;
    }
  }

  // Program order is a topological order, so a reverse sweep closes reach_.
  const std::size_t words = (n + 63) / 64;
  reach_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t s : succ_[i]) {
      set_bit(reach_[i], s);
      for (std::size_t w = 0; w < words; ++w)
        reach_[i][w] |= reach_[s][w];
    }
  }
}

bool CircuitDag::has_edge(std::size_t from, std::size_t to) const {
  const auto& s = succ_[from];
  return std::find(s.begin(), s.end(), to) != s.end();
}

std::vector<std::pair<std::size_t, std::size_t>> CircuitDag::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < succ_.size(); ++u)
    for (std::size_t v : succ_[u])
      out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

bool CircuitDag::precedes(std::size_t ancestor, std::size_t node) const {
  return test_bit(reach_[ancestor], node);
}

CircuitDag build_dag(const Circuit& circuit) { return CircuitDag(circuit); }

namespace {

class OrderEnumerator {
public:
  OrderEnumerator(const CircuitDag& dag, std::size_t limit)
      : dag_(dag), cnots_(dag.cnots()), limit_(limit),
        blockers_(cnots_.size(), 0), placed_(cnots_.size(), false) {
    for (std::size_t a = 0; a < cnots_.size(); ++a)
      for (std::size_t b = 0; b < cnots_.size(); ++b)
        if (dag_.precedes(cnots_[a], cnots_[b]))
          ++blockers_[b];
  }

  OrderEnumeration run() {
    if (limit_ == 0)
      throw std::invalid_argument("order limit must be at least 1");
    dfs();
    return std::move(result_);
  }

private:
  // Returns false once enumeration must stop.
  bool dfs() {
    if (current_.size() == cnots_.size()) {
      if (result_.orders.size() == limit_) {
        result_.truncated = true;
        return false;
      }
      result_.orders.push_back(current_);
      return true;
    }
    for (std::size_t c = 0; c < cnots_.size(); ++c) {
      if (placed_[c] || blockers_[c] != 0)
        continue;
      place(c, true);
      const bool go_on = dfs();
      place(c, false);
      if (!go_on)
        return false;
    }
    return true;
  }

  void place(std::size_t c, bool on) {
    placed_[c] = on;
    if (on)
      current_.push_back(cnots_[c]);
    else
      current_.pop_back();
    for (std::size_t d = 0; d < cnots_.size(); ++d)
      if (dag_.precedes(cnots_[c], cnots_[d])) {
        if (on)
          --blockers_[d];
        else
          ++blockers_[d];
      }
  }

  const CircuitDag& dag_;
  const std::vector<std::size_t>& cnots_;
  std::size_t limit_;
  std::vector<std::size_t> blockers_;
  std::vector<bool> placed_;
  CnotOrder current_;
  OrderEnumeration result_;
};

} // namespace

OrderEnumeration enumerate_cnot_orders(const CircuitDag& dag,
                                       std::size_t limit) {
  return OrderEnumerator(dag, limit).run();
}

bool is_valid_cnot_order(const CircuitDag& dag, const CnotOrder& order) {
  const auto& cnots = dag.cnots();
  if (order.size() != cnots.size())
    return false;
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != cnots)
    return false;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (dag.precedes(order[j], order[i]))
        return false;
  return true;
}

std::vector<std::size_t> linearize(const CircuitDag& dag,
                                   const CnotOrder& order) {
  if (!is_valid_cnot_order(dag, order))
    throw std::invalid_argument("not a valid CNOT order for this circuit");

  const std::size_t n = dag.size();
  std::vector<std::size_t> pending(n);
  for (std::size_t i = 0; i < n; ++i)
    pending[i] = dag.predecessors(i).size();
  std::vector<bool> emitted(n, false);

  std::vector<std::size_t> out;
  out.reserve(n);
  std::size_t next_cnot = 0;
  while (out.size() < n) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (emitted[i] || pending[i] != 0)
        continue;
      if (dag.circuit()[i].kind == GateKind::CNOT &&
          (next_cnot >= order.size() || order[next_cnot] != i))
        continue;
      pick = i;
      break;
    }
    if (!pick)
      throw std::logic_error("linearize: no eligible gate");
    emitted[*pick] = true;
    out.push_back(*pick);
    if (dag.circuit()[*pick].kind == GateKind::CNOT)
      ++next_cnot;
    for (std::size_t s : dag.successors(*pick))
      --pending[s];
  }
  return out;
}

CnotChain build_cnot_chain(const CircuitDag& dag, const CnotOrder& order) {
  if (!is_valid_cnot_order(dag, order))
    throw std::invalid_argument("not a valid CNOT order for this circuit");

  CnotChain chain;
  std::optional<Qubit> previous_target;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const Gate& g = dag.circuit()[order[pos]];
    const bool shares = previous_target && *previous_target == g.control();
    if (!shares) {
      chain.vertices.push_back(g.control());
      if (previous_target)
        chain.weights.push_back(0);
    }
    chain.vertices.push_back(g.target());
    chain.cnot_edge.push_back(chain.weights.size());
    chain.weights.push_back(1);
    chain.cnot_index.push_back(pos);
    previous_target = g.target();
  }
  return chain;
}

} // namespace qroute
