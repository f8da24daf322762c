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

#include "qroute/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qroute/coupling.hpp"
#include "qroute/diagram.hpp"
#include "qroute/error.hpp"
#include "qroute/generate.hpp"
#include "qroute/qasm.hpp"
#include "qroute/report.hpp"
#include "qroute/verify.hpp"

namespace qroute::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << content;
}

void emit(const RunConfig& config, const std::string& content,
          std::ostream& out) {
  if (config.output_path.empty())
    out << content;
  else
    write_file(config.output_path, content);
}

Circuit load_circuit(const std::string& path, std::ostream& err) {
  if (path.empty())
    throw ParseError("--circuit is required");
  ParsedCircuit parsed = parse_qasm(read_file(path));
  for (const auto& w : parsed.warnings)
    err << path << ": warning: " << w << "\n";
  return std::move(parsed.circuit);
}

CouplingGraph load_coupling(const std::string& path) {
  if (path.empty())
    throw ParseError("--coupling is required");
  return parse_coupling(read_file(path));
}

Configuration explicit_config(const RunConfig& config, std::size_t width) {
  if (config.explicit_initial.size() != width)
    throw std::invalid_argument("explicit initial permutation has " +
                                std::to_string(config.explicit_initial.size()) +
                                " entries, device has " +
                                std::to_string(width));
  return Configuration::from_to_hw(config.explicit_initial);
}

int do_compile(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Circuit circuit = load_circuit(config.circuit_path, err);
  const CouplingGraph graph = load_coupling(config.coupling_path);
  const std::size_t width = graph.num_qubits();

  Solution solution;
  if (config.strategy == Strategy::Greedy) {
    switch (config.initial) {
    case InitialMode::Identity:
      solution = compile_greedy(circuit, graph, Configuration::identity(width),
                                config.options);
      break;
    case InitialMode::Explicit:
      solution = compile_greedy(circuit, graph, explicit_config(config, width),
                                config.options);
      break;
    case InitialMode::Enumerate:
      solution = compile_greedy_multistart(
          circuit, graph, config.budget.max_initial_configs, config.options);
      break;
    }
  } else {
    std::optional<Configuration> fixed;
    if (config.initial == InitialMode::Identity)
      fixed = Configuration::identity(width);
    else if (config.initial == InitialMode::Explicit)
      fixed = explicit_config(config, width);
    solution = compile_exact(circuit, graph, config.budget, config.options, fixed);
  }

  const std::string json = solution_to_json(
      solution, config.options,
      config.strategy == Strategy::Greedy ? "greedy" : "exact");
  emit(config, json, out);
  if (!config.output_path.empty()) {
    std::filesystem::path qasm_path(config.output_path);
    qasm_path.replace_extension(".qasm");
    write_file(qasm_path.string(), to_qasm(solution.compiled));
  }
  if (solution.incomplete) {
    err << "warning: search budget exhausted, result may not be optimal\n";
    if (config.strict)
      return kBudgetExhausted;
  }
  return kOk;
}

int do_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Circuit original = load_circuit(config.circuit_path, err);
  const CouplingGraph graph = load_coupling(config.coupling_path);
  if (config.solution_path.empty())
    throw ParseError("--solution is required");
  Solution solution = solution_from_json(read_file(config.solution_path));
  if (!config.compiled_path.empty())
    solution.compiled = load_circuit(config.compiled_path, err);

  const StructuralReport structural =
      structural_check(solution.compiled, graph);
  SemanticReport semantic;
  if (solution.compiled.num_qubits() == solution.initial_config.size())
    semantic = semantic_check(original, solution);
  else
    semantic.max_amplitude_error = std::numeric_limits<double>::infinity();

  emit(config, verification_to_json(structural, semantic), out);
  return structural.pass && semantic.pass ? kOk : kVerificationFailed;
}

int do_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Circuit circuit = load_circuit(config.circuit_path, err);
  std::size_t vertices = circuit.num_qubits();
  if (!config.coupling_path.empty())
    vertices = load_coupling(config.coupling_path).num_qubits();

  const Metrics m = metrics(circuit, config.options.expand_swap);
  nlohmann::ordered_json doc;
  doc["num_qubits"] = circuit.num_qubits();
  nlohmann::ordered_json counts;
  for (const auto& [kind, count] : m.counts)
    counts[std::string(mnemonic(kind))] = count;
  doc["gate_counts"] = counts;
  doc["total"] = m.total;
  doc["depth"] = m.depth;
  doc["cnots"] = circuit.count(GateKind::CNOT);
  doc["coupling_vertices"] = vertices;
  doc["search_space_size"] =
      search_space_size(circuit.num_qubits(), circuit.count(GateKind::CNOT),
                        vertices)
          .str();
  emit(config, doc.dump(2) + "\n", out);
  return kOk;
}

int do_diagram(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Circuit circuit = load_circuit(config.circuit_path, err);
  const CouplingGraph graph = load_coupling(config.coupling_path);
  const std::string dot = export_search_diagram(
      circuit, graph, circuit.cnot_indices(), config.q_limit);
  emit(config, dot, out);
  return kOk;
}

int do_generate(const RunConfig& config, std::ostream& out) {
  const Circuit c = random_circuit(
      config.seed, {config.gen_qubits, config.gen_cnots, config.gen_singles});
  emit(config, to_qasm(c), out);
  return kOk;
}

} // namespace

void parse_initial(const std::string& text, RunConfig& config) {
  if (text == "identity") {
    config.initial = InitialMode::Identity;
  } else if (text == "enumerate") {
    config.initial = InitialMode::Enumerate;
  } else {
    config.initial = InitialMode::Explicit;
    config.explicit_initial.clear();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size())
        throw std::invalid_argument("bad --initial entry '" + item + "'");
      config.explicit_initial.push_back(static_cast<Qubit>(v));
    }
    Configuration::from_to_hw(config.explicit_initial); // bijection check
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
    case Command::Compile: return do_compile(config, out, err);
    case Command::Verify: return do_verify(config, out, err);
    case Command::Stats: return do_stats(config, out, err);
    case Command::Diagram: return do_diagram(config, out, err);
    case Command::Generate: return do_generate(config, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const RoutingError& e) {
    err << "error: routing infeasible: " << e.what() << "\n";
    return kRoutingInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

int main(int argc, char** argv) {
  CLI::App app{"qroute: SWAP/Hadamard routing of quantum circuits onto "
               "coupling graphs"};
  app.require_subcommand(1);

  RunConfig config;
  std::string initial;
  std::string strategy = "greedy";
  std::size_t max_configs = kAll, max_orders = kAll, max_nodes = kAll;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--circuit", config.circuit_path, "input QASM file");
    sub->add_option("--coupling", config.coupling_path, "coupling graph JSON");
    sub->add_option("--out", config.output_path, "output file (default stdout)");
    sub->add_flag("--expand-swap", config.options.expand_swap,
                  "count SWAP as three CNOTs");
  };

  auto* compile = app.add_subcommand("compile", "route a circuit");
  common(compile);
  compile->add_option("--strategy", strategy, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  compile->add_option("--initial", initial,
                      "identity, enumerate, or a permutation like 2,0,1 "
                      "(default: enumerate for exact, identity for greedy)");
  compile->add_option("--max-configs", max_configs, "initial configurations");
  compile->add_option("--max-orders", max_orders, "CNOT orders");
  compile->add_option("--max-nodes", max_nodes, "search nodes");
  compile->add_option("--time-limit", config.budget.time_limit_seconds,
                      "seconds");
  compile->add_option("--swap-weight", config.options.swap_weight,
                      "SWAP cost in Hadamards");
  compile->add_option("--threads", config.options.threads, "search threads");
  compile->add_flag("--strict", config.strict,
                    "exit 4 when the search budget runs out");

  auto* verify = app.add_subcommand("verify", "check a compiled solution");
  common(verify);
  verify->add_option("--solution", config.solution_path, "Solution JSON");
  verify->add_option("--compiled", config.compiled_path,
                     "QASM overriding the solution's compiled circuit");

  auto* stats = app.add_subcommand("stats", "circuit metrics");
  common(stats);

  auto* diagram = app.add_subcommand("diagram", "search diagram as DOT");
  common(diagram);
  diagram->add_option("--q-limit", config.q_limit, "largest device size");

  auto* generate = app.add_subcommand("generate", "seeded random circuit");
  generate->add_option("--out", config.output_path, "output file");
  generate->add_option("--seed", config.seed, "random seed");
  generate->add_option("--qubits", config.gen_qubits, "qubits");
  generate->add_option("--cnots", config.gen_cnots, "CNOT count");
  generate->add_option("--singles", config.gen_singles,
                       "single-qubit gate count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  if (initial.empty())
    initial = strategy == "exact" ? "enumerate" : "identity";
  try {
    parse_initial(initial, config);
  } catch (const std::exception& e) {
    std::cerr << "error: --initial: " << e.what() << "\n";
    return kParseError;
  }
  config.strategy = strategy == "exact" ? Strategy::Exact : Strategy::Greedy;
  config.budget.max_initial_configs = max_configs;
  config.budget.max_cnot_orders = max_orders;
  config.budget.max_nodes = max_nodes;

  if (compile->parsed())
    config.command = Command::Compile;
  else if (verify->parsed())
    config.command = Command::Verify;
  else if (stats->parsed())
    config.command = Command::Stats;
  else if (diagram->parsed())
    config.command = Command::Diagram;
  else
    config.command = Command::Generate;
  return run(config, std::cout, std::cerr);
}

} // namespace qroute::cli
