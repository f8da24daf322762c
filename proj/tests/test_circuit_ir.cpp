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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qroute/circuit.hpp"
#include "qroute/dag.hpp"
#include "qroute/error.hpp"
#include "qroute/generate.hpp"
#include "qroute/qasm.hpp"

using namespace qroute;

namespace {

Circuit random_mixed(std::mt19937_64& rng, std::size_t q, std::size_t len) {
  Circuit c(q);
  for (std::size_t i = 0; i < len; ++i) {
    const auto kind = kAllGateKinds[rng() % kAllGateKinds.size()];
    const auto a = static_cast<Qubit>(rng() % q);
    if (arity(kind) == 1) {
      c.append(Gate::single(kind, a));
      continue;
    }
    auto b = static_cast<Qubit>(rng() % (q - 1));
    if (b >= a)
      ++b;
    c.append(kind == GateKind::CNOT ? Gate::cnot(a, b) : Gate::swap(a, b));
  }
  return c;
}

ParseError parse_error_of(const std::string& text) {
  try {
    parse_qasm(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError("none");
}

} // namespace

TEST(Qasm, MinimalProgram) {
  const auto parsed = parse_qasm("qreg q[2]; cx q[0],q[1];");
  EXPECT_EQ(parsed.circuit, Circuit(2, {Gate::cnot(0, 1)}));
  EXPECT_TRUE(parsed.warnings.empty());
}

TEST(Qasm, SourceOrderPreserved) {
  const auto parsed = parse_qasm("qreg q[3]; h q[0]; cx q[0],q[2]; t q[2];");
  EXPECT_EQ(parsed.circuit,
            Circuit(3, {Gate::single(GateKind::H, 0), Gate::cnot(0, 2),
                        Gate::single(GateKind::T, 2)}));
}

TEST(Qasm, CnotArityError) {
  const ParseError e = parse_error_of("qreg q[2]; cx q[0];");
  EXPECT_NE(std::string(e.what()).find("cx expects 2"), std::string::npos);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 12u);
}

TEST(Qasm, ErrorsCarryPosition) {
  const ParseError unsupported = parse_error_of("qreg q[2];\n  rz q[0];");
  EXPECT_EQ(unsupported.line(), 2u);
  EXPECT_EQ(unsupported.column(), 3u);

  const ParseError range = parse_error_of("qreg q[2];\nh q[5];");
  EXPECT_EQ(range.line(), 2u);
  EXPECT_EQ(range.column(), 5u);

  const ParseError twice = parse_error_of("qreg q[2];\nqreg r[2];");
  EXPECT_EQ(twice.line(), 2u);
  EXPECT_NE(std::string(twice.what()).find("multiple qreg"), std::string::npos);

  const ParseError syntax = parse_error_of("qreg q[2]; h q[0]");
  EXPECT_EQ(syntax.line(), 1u);

  EXPECT_THROW(parse_qasm("qreg q[2]; cx q[1],q[1];"), ParseError);
  EXPECT_THROW(parse_qasm("qreg q[2]; h r[0];"), ParseError);
  EXPECT_THROW(parse_qasm("h q[0]; qreg q[2];"), ParseError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;"), ParseError);
  EXPECT_THROW(parse_qasm("qreg q[2]; h q[0]; $"), ParseError);
}

TEST(Qasm, SkipsMeasureBarrierCregWithWarnings) {
  const auto parsed = parse_qasm(R"(OPENQASM 2.0;
include "qelib1.inc";
// comment line
qreg q[2];
creg c[2];
h q[0];
barrier q[0],q[1];
cx q[0],q[1];
measure q[0] -> c[0];
)");
  EXPECT_EQ(parsed.circuit,
            Circuit(2, {Gate::single(GateKind::H, 0), Gate::cnot(0, 1)}));
  ASSERT_EQ(parsed.warnings.size(), 3u);
  EXPECT_NE(parsed.warnings[0].find("creg"), std::string::npos);
  EXPECT_NE(parsed.warnings[1].find("barrier"), std::string::npos);
  EXPECT_NE(parsed.warnings[2].find("measure"), std::string::npos);
}

TEST(Qasm, SerializerFormat) {
  const Circuit c(2, {Gate::single(GateKind::Tdg, 1), Gate::swap(0, 1)});
  EXPECT_EQ(to_qasm(c), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n"
                        "tdg q[1];\nswap q[0],q[1];\n");
}

TEST(QasmProperty, RoundTripIsIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t q = 2 + rng() % 7;
    const Circuit c = random_mixed(rng, q, rng() % 30);
    EXPECT_EQ(parse_qasm(to_qasm(c)).circuit, c);
  }
}

TEST(CircuitInvariants, RejectsBadOperands) {
  EXPECT_THROW(Circuit(2, {Gate::cnot(0, 2)}), std::out_of_range);
  EXPECT_THROW(Circuit(2, {Gate::cnot(1, 1)}), std::invalid_argument);
  EXPECT_THROW(Gate::single(GateKind::CNOT, 0), std::invalid_argument);
}

TEST(Dag, DisjointCnotsHaveNoEdge) {
  const CircuitDag dag = build_dag(Circuit(4, {Gate::cnot(0, 1), Gate::cnot(2, 3)}));
  EXPECT_TRUE(dag.edges().empty());
  EXPECT_FALSE(dag.precedes(0, 1));
  EXPECT_FALSE(dag.precedes(1, 0));
}

TEST(Dag, SharedWireOrdersGates) {
  const CircuitDag dag =
      build_dag(Circuit(2, {Gate::single(GateKind::H, 0), Gate::cnot(0, 1)}));
  const std::vector<std::pair<std::size_t, std::size_t>> want{{0, 1}};
  EXPECT_EQ(dag.edges(), want);
}

TEST(Dag, TriangleOfCnots) {
  const CircuitDag dag = build_dag(
      Circuit(3, {Gate::cnot(0, 1), Gate::cnot(1, 2), Gate::cnot(0, 2)}));
  const std::vector<std::pair<std::size_t, std::size_t>> want{
      {0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(dag.edges(), want);
}

TEST(DagProperty, PerWireChainsMatchCircuit) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 2 + rng() % 5;
    const Circuit c = random_mixed(rng, q, rng() % 25);
    const CircuitDag dag = build_dag(c);
    // Oracle: per-wire consecutive pairs.
    std::set<std::pair<std::size_t, std::size_t>> want;
    for (Qubit w = 0; w < q; ++w) {
      std::size_t prev = c.size();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].touches(w)) {
          if (prev != c.size())
            want.insert({prev, i});
          prev = i;
        }
    }
    const auto got = dag.edges();
    EXPECT_EQ(std::set(got.begin(), got.end()), want);
    for (auto [u, v] : got)
      EXPECT_LT(u, v); // acyclic: edges follow program order
    // Unordered iff wire sets are disjoint along every path: precedes is the
    // transitive closure of the edge set.
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        bool reach = false;
        std::vector<bool> seen(c.size(), false);
        std::vector<std::size_t> stack{i};
        while (!stack.empty() && !reach) {
          const std::size_t u = stack.back();
          stack.pop_back();
          for (auto [a, b] : want)
            if (a == u && !seen[b]) {
              seen[b] = true;
              reach = reach || b == j;
              stack.push_back(b);
            }
        }
        EXPECT_EQ(dag.precedes(i, j), reach);
      }
  }
}

TEST(Orders, TwoIndependentCnots) {
  const auto e = enumerate_cnot_orders(
      build_dag(Circuit(4, {Gate::cnot(0, 1), Gate::cnot(2, 3)})), 10);
  EXPECT_EQ(e.orders.size(), 2u);
  EXPECT_FALSE(e.truncated);
  EXPECT_EQ(e.orders[0], (CnotOrder{0, 1}));
  EXPECT_EQ(e.orders[1], (CnotOrder{1, 0}));
}

TEST(Orders, ChainDependency) {
  const auto e = enumerate_cnot_orders(
      build_dag(Circuit(3, {Gate::cnot(0, 1), Gate::cnot(1, 2)})), 10);
  EXPECT_EQ(e.orders.size(), 1u);
  EXPECT_FALSE(e.truncated);
}

TEST(Orders, LimitTruncates) {
  const CircuitDag dag = build_dag(
      Circuit(6, {Gate::cnot(0, 1), Gate::cnot(2, 3), Gate::cnot(4, 5)}));
  const auto cut = enumerate_cnot_orders(dag, 4);
  EXPECT_EQ(cut.orders.size(), 4u);
  EXPECT_TRUE(cut.truncated);
  const auto all = enumerate_cnot_orders(dag, 6);
  EXPECT_EQ(all.orders.size(), 6u);
  EXPECT_FALSE(all.truncated);
  EXPECT_TRUE(std::is_sorted(all.orders.begin(), all.orders.end()));
  EXPECT_THROW(enumerate_cnot_orders(dag, 0), std::invalid_argument);
}

TEST(Orders, SingleQubitGatesConstrainOrder) {
  // CNOT(1,3) waits for H(1), which waits for CNOT(0,1).
  const Circuit c(4, {Gate::cnot(0, 1), Gate::single(GateKind::H, 1),
                      Gate::cnot(1, 3), Gate::cnot(2, 0)});
  const auto e = enumerate_cnot_orders(build_dag(c), 100);
  for (const auto& order : e.orders) {
    const auto pos = [&](std::size_t g) {
      return std::find(order.begin(), order.end(), g) - order.begin();
    };
    EXPECT_LT(pos(0), pos(2));
    EXPECT_LT(pos(0), pos(3));
  }
  EXPECT_EQ(e.orders.size(), 2u);
}

TEST(OrdersProperty, EveryOrderRespectsDagAndAllAreFound) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t q = 2 + rng() % 4;
    const Circuit c = random_mixed(rng, q, 1 + rng() % 8);
    const CircuitDag dag = build_dag(c);
    const auto e = enumerate_cnot_orders(dag, 100000);
    std::set<CnotOrder> distinct(e.orders.begin(), e.orders.end());
    EXPECT_EQ(distinct.size(), e.orders.size());
    for (const auto& order : e.orders) {
      EXPECT_TRUE(is_valid_cnot_order(dag, order));
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
          EXPECT_FALSE(dag.precedes(order[j], order[i]));
    }
    // Oracle: filter all permutations of the CNOT indices.
    std::vector<std::size_t> perm = c.cnot_indices();
    std::size_t valid = 0;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < perm.size() && ok; ++i)
        for (std::size_t j = i + 1; j < perm.size() && ok; ++j)
          ok = !dag.precedes(perm[j], perm[i]);
      valid += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(e.orders.size(), valid);
  }
}

TEST(Linearize, ProgramOrderReproducesCircuit) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = random_mixed(rng, 2 + rng() % 4, rng() % 15);
    const CircuitDag dag = build_dag(c);
    std::vector<std::size_t> all(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      all[i] = i;
    EXPECT_EQ(linearize(dag, c.cnot_indices()), all);
  }
}

TEST(Linearize, FollowsGivenCnotOrder) {
  const Circuit c(4, {Gate::cnot(0, 1), Gate::single(GateKind::H, 3),
                      Gate::cnot(2, 3)});
  const auto seq = linearize(build_dag(c), {2, 0});
  EXPECT_EQ(seq, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(Chain, SharedTargetControl) {
  const Circuit c(3, {Gate::cnot(0, 1), Gate::cnot(1, 2)});
  const CnotChain chain = build_cnot_chain(build_dag(c), {0, 1});
  EXPECT_EQ(chain.vertices, (std::vector<Qubit>{0, 1, 2}));
  EXPECT_EQ(chain.weights, (std::vector<std::uint8_t>{1, 1}));
  EXPECT_EQ(chain.cnot_index, (std::vector<std::size_t>{0, 1}));
}

TEST(Chain, DisjointCnots) {
  const Circuit c(4, {Gate::cnot(0, 1), Gate::cnot(2, 3)});
  const CnotChain chain = build_cnot_chain(build_dag(c), {0, 1});
  EXPECT_EQ(chain.vertices, (std::vector<Qubit>{0, 1, 2, 3}));
  EXPECT_EQ(chain.weights, (std::vector<std::uint8_t>{1, 0, 1}));
  EXPECT_EQ(chain.cnot_edge, (std::vector<std::size_t>{0, 2}));
}

TEST(Chain, SingleCnot) {
  const CnotChain chain =
      build_cnot_chain(build_dag(Circuit(2, {Gate::cnot(0, 1)})), {0});
  EXPECT_EQ(chain.vertices, (std::vector<Qubit>{0, 1}));
  EXPECT_EQ(chain.weights, (std::vector<std::uint8_t>{1}));
}

TEST(Chain, RejectsInvalidOrder) {
  const CircuitDag dag =
      build_dag(Circuit(3, {Gate::cnot(0, 1), Gate::cnot(1, 2)}));
  EXPECT_THROW(build_cnot_chain(dag, {1, 0}), std::invalid_argument);
  EXPECT_THROW(build_cnot_chain(dag, {0}), std::invalid_argument);
}

TEST(ChainProperty, VertexCountAndWeightSum) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c = random_mixed(rng, 2 + rng() % 5, rng() % 20);
    const CircuitDag dag = build_dag(c);
    for (const auto& order : enumerate_cnot_orders(dag, 5).orders) {
      const CnotChain chain = build_cnot_chain(dag, order);
      const std::size_t n = order.size();
      std::size_t shares = 0;
      for (std::size_t k = 1; k < n; ++k)
        shares += c[order[k]].control() == c[order[k - 1]].target();
      EXPECT_EQ(chain.vertices.size(), n == 0 ? 0 : 2 * n - shares);
      std::size_t sum = 0;
      for (auto w : chain.weights) {
        EXPECT_LE(w, 1);
        sum += w;
      }
      EXPECT_EQ(sum, n);
      // CNOT-edges join control to target of the originating CNOT.
      for (std::size_t k = 0; k < chain.cnot_edge.size(); ++k) {
        const Gate& g = c[order[chain.cnot_index[k]]];
        EXPECT_EQ(chain.vertices[chain.cnot_edge[k]], g.control());
        EXPECT_EQ(chain.vertices[chain.cnot_edge[k] + 1], g.target());
      }
    }
  }
}

TEST(Metrics, ParallelGates) {
  const Metrics m = metrics(
      Circuit(2, {Gate::single(GateKind::H, 0), Gate::single(GateKind::H, 1)}));
  EXPECT_EQ(m.total, 2u);
  EXPECT_EQ(m.depth, 1u);
  EXPECT_EQ(m.counts.at(GateKind::H), 2u);
}

TEST(Metrics, SerialDependency) {
  const Metrics m =
      metrics(Circuit(2, {Gate::single(GateKind::H, 0), Gate::cnot(0, 1),
                          Gate::single(GateKind::H, 1)}));
  EXPECT_EQ(m.total, 3u);
  EXPECT_EQ(m.depth, 3u);
}

TEST(Metrics, ExpandedSwap) {
  const Circuit c(2, {Gate::swap(0, 1)});
  const Metrics plain = metrics(c);
  EXPECT_EQ(plain.total, 1u);
  EXPECT_EQ(plain.depth, 1u);
  const Metrics expanded = metrics(c, true);
  EXPECT_EQ(expanded.total, 3u);
  EXPECT_EQ(expanded.depth, 3u);
  EXPECT_EQ(expanded.counts.at(GateKind::CNOT), 3u);
}

TEST(MetricsProperty, DepthBoundsPerWireCount) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 1 + rng() % 6;
    const Circuit c = q == 1 ? random_circuit(rng(), {1, 0, rng() % 10})
                             : random_mixed(rng, q, rng() % 30);
    const Metrics m = metrics(c);
    std::size_t busiest = 0;
    for (Qubit w = 0; w < q; ++w)
      busiest = std::max<std::size_t>(
          busiest, std::count_if(c.gates().begin(), c.gates().end(),
                                 [&](const Gate& g) { return g.touches(w); }));
    EXPECT_GE(m.depth, busiest);
    EXPECT_LE(m.depth, c.size());
    EXPECT_EQ(m.total, c.size());
  }
}

TEST(Generate, SeededCircuitsAreReproducible) {
  const RandomCircuitSpec spec{5, 8, 6};
  EXPECT_EQ(random_circuit(42, spec), random_circuit(42, spec));
  EXPECT_NE(random_circuit(42, spec), random_circuit(43, spec));
  const Circuit c = random_circuit(7, spec);
  EXPECT_EQ(c.count(GateKind::CNOT), 8u);
  EXPECT_EQ(c.size(), 14u);
}
