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

#include "qroute/report.hpp"

#include <json.hpp>

#include "qroute/error.hpp"
#include "qroute/qasm.hpp"

namespace qroute {

using nlohmann::ordered_json;

namespace {

ordered_json as_array(std::span<const Qubit> values) {
  auto a = ordered_json::array();
  for (Qubit v : values)
    a.push_back(v);
  return a;
}

} // namespace

std::string solution_to_json(const Solution& solution,
                             const CompileOptions& options,
                             std::string_view strategy) {
  ordered_json doc;
  doc["strategy"] = strategy;
  doc["num_qubits"] = solution.compiled.num_qubits();
  doc["added_swaps"] = solution.added_swaps;
  doc["added_hadamards"] = solution.added_hadamards;
  doc["depth"] = solution.depth;
  doc["swap_weight"] = options.swap_weight;
  doc["expand_swap"] = options.expand_swap;
  doc["objective"] = solution.objective(options.swap_weight).cost;
  doc["initial_config"] = as_array(solution.initial_config.to_hw());
  doc["final_config"] = as_array(solution.final_config.to_hw());
  doc["final_wire_to_qubit"] = as_array(solution.final_config.to_circ());
  doc["cnot_order"] = solution.cnot_order;
  doc["inserted_gates"] = solution.inserted;
  doc["incomplete"] = solution.incomplete;
  doc["compiled_qasm"] = to_qasm(solution.compiled);
  return doc.dump(2) + "\n";
}

Solution solution_from_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    Solution s;
    s.compiled = parse_qasm(doc.at("compiled_qasm").get<std::string>()).circuit;
    s.added_swaps = doc.at("added_swaps").get<std::size_t>();
    s.added_hadamards = doc.at("added_hadamards").get<std::size_t>();
    s.depth = doc.at("depth").get<std::size_t>();
    s.initial_config = Configuration::from_to_hw(
        doc.at("initial_config").get<std::vector<Qubit>>());
    s.final_config = Configuration::from_to_hw(
        doc.at("final_config").get<std::vector<Qubit>>());
    if (doc.contains("cnot_order"))
      s.cnot_order = doc.at("cnot_order").get<CnotOrder>();
    if (doc.contains("inserted_gates"))
      s.inserted = doc.at("inserted_gates").get<std::vector<std::size_t>>();
    s.incomplete = doc.value("incomplete", false);
    if (s.initial_config.size() != s.compiled.num_qubits() ||
        s.final_config.size() != s.compiled.num_qubits())
      throw ParseError("solution configurations do not match circuit width");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  }
}

std::string verification_to_json(const StructuralReport& structural,
                                 const SemanticReport& semantic) {
  ordered_json doc;
  auto violations = ordered_json::array();
  for (const Violation& v : structural.violations)
    violations.push_back({{"gate_index", v.gate_index},
                          {"kind", to_string(v.kind)},
                          {"message", v.message}});
  doc["structural"] = {{"pass", structural.pass},
                       {"violations", violations}};
  doc["semantic"] = {{"pass", semantic.pass},
                     {"max_amplitude_error", semantic.max_amplitude_error}};
  return doc.dump(2) + "\n";
}

} // namespace qroute
