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

#include "qroute/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "qroute/error.hpp"
#include "qroute/routing.hpp"

namespace qroute {

void SearchBudget::validate() const {
  if (max_initial_configs == 0 || max_cnot_orders == 0 || max_nodes == 0 ||
      !(time_limit_seconds > 0.0))
    throw std::invalid_argument("search budget limits must be positive");
}

Configuration nth_configuration(std::size_t n, std::size_t index) {
  std::vector<std::size_t> digits(n, 0);
  std::size_t rem = index;
  for (std::size_t k = 1; k <= n; ++k) {
    digits[n - k] = rem % k;
    rem /= k;
  }
  std::vector<Qubit> pool(n);
  std::iota(pool.begin(), pool.end(), Qubit{0});
  std::vector<Qubit> perm;
  perm.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    perm.push_back(pool[digits[p]]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[p]));
  }
  return Configuration::from_to_hw(std::move(perm));
}

boost::multiprecision::cpp_int search_space_size(std::size_t q, std::size_t n,
                                                 std::size_t v) {
  using boost::multiprecision::cpp_int;
  cpp_int result = 2;
  result *= n;
  for (std::size_t i = 2; i <= q; ++i)
    result *= i;
  result *= boost::multiprecision::pow(cpp_int(v), static_cast<unsigned>(n));
  for (std::size_t i = 2; i <= n; ++i)
    result *= i;
  return result;
}

namespace {

/// Partially compiled circuit plus the running placement.
struct State {
  Configuration config;
  std::vector<Gate> gates;
  std::vector<std::size_t> inserted;
  std::vector<std::size_t> wire_depth;
  std::size_t depth = 0;
  std::size_t swaps = 0;
  std::size_t hadamards = 0;

  State(Configuration initial, std::size_t num_vertices)
      : config(std::move(initial)), wire_depth(num_vertices, 0) {}

  Objective objective(double swap_weight) const {
    return {swap_weight * static_cast<double>(swaps) +
                static_cast<double>(hadamards),
            depth};
  }
};

struct Mark {
  std::size_t gates, inserted, depth, swaps, hadamards;
  std::vector<std::size_t> wire_depth;
  Configuration config;
};

Mark mark(const State& s) {
  return {s.gates.size(), s.inserted.size(), s.depth,     s.swaps,
          s.hadamards,    s.wire_depth,      s.config};
}

void restore(State& s, const Mark& m) {
  s.gates.resize(m.gates);
  s.inserted.resize(m.inserted);
  s.depth = m.depth;
  s.swaps = m.swaps;
  s.hadamards = m.hadamards;
  s.wire_depth = m.wire_depth;
  s.config = m.config;
}

void emit(State& s, const Gate& g, bool inserted, bool expand_swap) {
  if (inserted) {
    s.inserted.push_back(s.gates.size());
    if (g.kind == GateKind::SWAP)
      ++s.swaps;
    else if (g.kind == GateKind::H)
      ++s.hadamards;
  }
  s.gates.push_back(g);
  std::size_t start = s.wire_depth[g.operands[0]];
  if (g.is_two_qubit())
    start = std::max(start, s.wire_depth[g.operands[1]]);
  const std::size_t end = start + gate_depth(g, expand_swap);
  s.wire_depth[g.operands[0]] = end;
  if (g.is_two_qubit())
    s.wire_depth[g.operands[1]] = end;
  s.depth = std::max(s.depth, end);
}

void apply_single(State& s, const Gate& logical, bool expand_swap) {
  emit(s, Gate::single(logical.kind, s.config.hw(logical.operands[0])), false,
       expand_swap);
}

void apply_routed(State& s, const Gate& logical, const RoutePlan& plan,
                  const CouplingGraph& graph, bool expand_swap) {
  for (const auto& [a, b] : plan.swaps)
    emit(s, Gate::swap(a, b), true, expand_swap);
  const Placement& at = plan.placement;
  if (logical.kind == GateKind::CNOT) {
    for (const Gate& g : expand_cnot(graph, at.control_end, at.target_end))
      emit(s, g, g.kind == GateKind::H, expand_swap);
  } else {
    // A circuit SWAP stays a physical SWAP; the placement is unchanged by it.
    emit(s, Gate::swap(at.control_end, at.target_end), false, expand_swap);
  }
  s.config = plan.resulting_config;
}

struct Problem {
  Circuit circuit; // padded to the device size
  CircuitDag dag;
  const CouplingGraph& graph;
  DistanceMatrix dm;
  CompileOptions options;

  Problem(const Circuit& input, const CouplingGraph& g,
          const CompileOptions& opts)
      : circuit(pad(input, g)), dag(circuit), graph(g),
        dm(all_pairs_shortest_paths(g, Directedness::Undirected)),
        options(opts) {
    if (!(options.swap_weight > 0.0))
      throw std::invalid_argument("swap weight must be positive");
  }

  static Circuit pad(const Circuit& c, const CouplingGraph& g) {
    if (c.num_qubits() > g.num_qubits())
      throw std::invalid_argument("circuit has more qubits than the device");
    return c.padded(g.num_qubits());
  }

  std::size_t vertices() const { return graph.num_qubits(); }
};

Solution finish(const Problem& p, const State& s, const Configuration& initial,
                const CnotOrder& order) {
  Solution sol;
  sol.compiled = Circuit(p.vertices(), s.gates);
  sol.added_swaps = s.swaps;
  sol.added_hadamards = s.hadamards;
  sol.depth = s.depth;
  sol.initial_config = initial;
  sol.final_config = s.config;
  sol.cnot_order = order;
  sol.inserted = s.inserted;
  return sol;
}

Solution greedy_run(const Problem& p, const Configuration& initial) {
  if (initial.size() != p.vertices())
    throw std::invalid_argument("initial configuration has the wrong size");
  State s(initial, p.vertices());
  const bool expand = p.options.expand_swap;
  for (const Gate& g : p.circuit.gates()) {
    if (!g.is_two_qubit()) {
      apply_single(s, g, expand);
      continue;
    }
    const EdgeChoice choice =
        select_best_edge(s.config, g.operands[0], g.operands[1], p.graph, p.dm);
    auto plan = try_route_mi(s.config, g.operands[0], g.operands[1],
                             choice.placement, p.graph, p.dm);
    if (!plan) {
      const Placement flipped{choice.placement.target_end,
                              choice.placement.control_end};
      plan = try_route_mi(s.config, g.operands[0], g.operands[1], flipped,
                          p.graph, p.dm);
    }
    if (!plan)
      throw RoutingError(RoutingError::Kind::NoPath,
                         "cannot route gate on qubits " +
                             std::to_string(g.operands[0]) + " and " +
                             std::to_string(g.operands[1]));
    apply_routed(s, g, *plan, p.graph, expand);
  }
  return finish(p, s, initial, p.circuit.cnot_indices());
}

// Backtracking over (initial configuration, CNOT order) subtrees. In
// serial mode subtrees run in index order against one running best, which is
// the textbook first-found backtracking. In parallel mode each subtree keeps
// its own best and is only cut strictly above the shared best, so ties are
// resolved by subtree index at merge time and both modes agree.
class ExactSearch {
public:
  ExactSearch(const Problem& p, const SearchBudget& budget,
              const std::optional<Configuration>& fixed_initial)
      : p_(p), budget_(budget), fixed_(fixed_initial),
        start_(std::chrono::steady_clock::now()) {
    budget_.validate();
    if (fixed_ && fixed_->size() != p_.vertices())
      throw std::invalid_argument("initial configuration has the wrong size");

    const OrderEnumeration orders =
        enumerate_cnot_orders(p_.dag, budget_.max_cnot_orders);
    truncated_ = orders.truncated;
    for (const CnotOrder& o : orders.orders) {
      orders_.push_back(o);
      sequences_.push_back(linearize(p_.dag, o));
    }

    if (fixed_) {
      num_configs_ = 1;
    } else {
      const std::size_t all = factorial_saturating(p_.vertices());
      num_configs_ = std::min(all, budget_.max_initial_configs);
      if (num_configs_ < all || all == kAll)
        truncated_ = true;
    }
  }

  Solution run(bool parallel, int threads) {
    const std::size_t per_config = orders_.size();
    const std::size_t cap =
        static_cast<std::size_t>(std::numeric_limits<std::int64_t>::max());
    const std::size_t total =
        num_configs_ > cap / per_config ? cap : num_configs_ * per_config;

    if (parallel) {
      const auto count = static_cast<std::int64_t>(total);
      const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
      for (std::int64_t s = 0; s < count; ++s) {
        if (stop_.load(std::memory_order_relaxed))
          continue;
        search_subtree(static_cast<std::size_t>(s), true);
      }
    } else {
      for (std::size_t s = 0; s < total && !stop_.load(); ++s)
        search_subtree(s, false);
    }

    if (!best_) {
      if (!stop_.load())
        throw RoutingError(RoutingError::Kind::AllUnreachable,
                           "no placement of the circuit is routable");
      // Budget ran out before any complete solution: fall back to one
      // greedy pass from the first configuration.
      best_ = greedy_run(p_, initial_for(0));
    }
    best_->incomplete = truncated_ || stop_.load();
    return std::move(*best_);
  }

private:
  Configuration initial_for(std::size_t config_index) const {
    return fixed_ ? *fixed_ : nth_configuration(p_.vertices(), config_index);
  }

  struct Local {
    std::optional<Solution> best;
    std::optional<Objective> best_obj;
    std::optional<Objective> shared;
    std::size_t since_refresh = 0;
    const Configuration* initial = nullptr;
    const CnotOrder* order = nullptr;
    const std::vector<std::size_t>* sequence = nullptr;
  };

  void search_subtree(std::size_t subtree, bool parallel) {
    const std::size_t ci = subtree / orders_.size();
    const std::size_t oi = subtree % orders_.size();
    const Configuration initial = initial_for(ci);

    Local local;
    local.initial = &initial;
    local.order = &orders_[oi];
    local.sequence = &sequences_[oi];
    {
      std::lock_guard lock(mutex_);
      if (parallel)
        local.shared = best_obj_;
      else
        local.best_obj = best_obj_;
    }

    State state(initial, p_.vertices());
    dfs(state, 0, local, parallel);

    if (!local.best)
      return;
    std::lock_guard lock(mutex_);
    const Objective obj = *local.best_obj;
    if (!best_obj_ || obj < *best_obj_ ||
        (obj == *best_obj_ && subtree < best_subtree_)) {
      best_ = std::move(local.best);
      best_obj_ = obj;
      best_subtree_ = subtree;
    }
  }

  bool pruned(const State& s, const Local& local) const {
    const Objective partial = s.objective(p_.options.swap_weight);
    if (local.best_obj && !(partial < *local.best_obj))
      return true;
    return local.shared && *local.shared < partial;
  }

  bool charge_node(Local& local, bool parallel) {
    const std::size_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.max_nodes) {
      stop_.store(true);
      return false;
    }
    if ((n & 255U) == 0 && std::isfinite(budget_.time_limit_seconds)) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.time_limit_seconds) {
        stop_.store(true);
        return false;
      }
    }
    if (parallel && ++local.since_refresh >= 256) {
      local.since_refresh = 0;
      std::lock_guard lock(mutex_);
      local.shared = best_obj_;
    }
    return !stop_.load(std::memory_order_relaxed);
  }

  void dfs(State& s, std::size_t pos, Local& local, bool parallel) {
    const auto& seq = *local.sequence;
    const bool expand = p_.options.expand_swap;
    const Mark entry = mark(s);

    while (pos < seq.size() && !p_.circuit[seq[pos]].is_two_qubit())
      apply_single(s, p_.circuit[seq[pos++]], expand);

    if (pos == seq.size()) {
      const Objective obj = s.objective(p_.options.swap_weight);
      if (!pruned(s, local)) {
        local.best_obj = obj;
        local.best = finish(p_, s, *local.initial, *local.order);
      }
      restore(s, entry);
      return;
    }
    if (pruned(s, local)) {
      restore(s, entry);
      return;
    }

    const Gate& g = p_.circuit[seq[pos]];
    for (const Edge& e : p_.graph.edges()) {
      for (const Placement at : {Placement{e.control, e.target},
                                 Placement{e.target, e.control}}) {
        if (!charge_node(local, parallel)) {
          restore(s, entry);
          return;
        }
        auto plan = try_route_mi(s.config, g.operands[0], g.operands[1], at,
                                 p_.graph, p_.dm);
        if (!plan)
          continue;
        const Mark before = mark(s);
        apply_routed(s, g, *plan, p_.graph, expand);
        if (!pruned(s, local))
          dfs(s, pos + 1, local, parallel);
        restore(s, before);
        if (stop_.load(std::memory_order_relaxed)) {
          restore(s, entry);
          return;
        }
      }
    }
    restore(s, entry);
  }

  const Problem& p_;
  SearchBudget budget_;
  std::optional<Configuration> fixed_;
  std::chrono::steady_clock::time_point start_;

  std::vector<CnotOrder> orders_;
  std::vector<std::vector<std::size_t>> sequences_;
  std::size_t num_configs_ = 0;
  bool truncated_ = false;

  std::mutex mutex_;
  std::optional<Solution> best_;
  std::optional<Objective> best_obj_;
  std::size_t best_subtree_ = 0;
  std::atomic<std::size_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

} // namespace

Solution compile_greedy(const Circuit& circuit, const CouplingGraph& graph,
                        const Configuration& initial,
                        const CompileOptions& options) {
  const Problem p(circuit, graph, options);
  return greedy_run(p, initial);
}

Solution compile_greedy_multistart(const Circuit& circuit,
                                   const CouplingGraph& graph,
                                   std::size_t max_configs,
                                   const CompileOptions& options) {
  if (max_configs == 0)
    throw std::invalid_argument("max_configs must be positive");
  const Problem p(circuit, graph, options);
  const std::size_t all = factorial_saturating(p.vertices());
  const std::size_t count = std::min(all, max_configs);

  std::optional<Solution> best;
  std::optional<RoutingError> last_error;
  for (std::size_t i = 0; i < count; ++i) {
    try {
      Solution s = greedy_run(p, nth_configuration(p.vertices(), i));
      if (!best || s.objective(options.swap_weight) <
                       best->objective(options.swap_weight))
        best = std::move(s);
    } catch (const RoutingError& e) {
      last_error = e;
    }
  }
  if (!best)
    throw *last_error;
  best->incomplete = count < all || all == kAll;
  return std::move(*best);
}

Solution compile_exact(const Circuit& circuit, const CouplingGraph& graph,
                       const SearchBudget& budget, const CompileOptions& options,
                       const std::optional<Configuration>& fixed_initial) {
  const Problem p(circuit, graph, options);
  ExactSearch search(p, budget, fixed_initial);
  return search.run(true, options.threads);
}

Solution compile_exact_serial(const Circuit& circuit,
                              const CouplingGraph& graph,
                              const SearchBudget& budget,
                              const CompileOptions& options,
                              const std::optional<Configuration>& fixed_initial) {
  const Problem p(circuit, graph, options);
  ExactSearch search(p, budget, fixed_initial);
  return search.run(false, 1);
}

} // namespace qroute
