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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qroute/search.hpp"

namespace qroute::cli {

enum class Command { Compile, Verify, Stats, Diagram, Generate };
enum class Strategy { Exact, Greedy };
enum class InitialMode { Identity, Enumerate, Explicit };

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kRoutingInfeasible = 2;
inline constexpr int kVerificationFailed = 3;
inline constexpr int kBudgetExhausted = 4;

struct RunConfig {
  Command command = Command::Compile;
  std::string circuit_path;
  std::string coupling_path;
  std::string solution_path; // verify: Solution JSON written by compile
  std::string compiled_path; // verify: optional QASM overriding the JSON's
  std::string output_path;   // empty: stdout

  Strategy strategy = Strategy::Greedy;
  InitialMode initial = InitialMode::Identity;
  std::vector<Qubit> explicit_initial;

  SearchBudget budget;
  CompileOptions options;
  bool strict = false;
  std::size_t q_limit = 4;

  // generate
  std::uint64_t seed = 0;
  std::size_t gen_qubits = 3;
  std::size_t gen_cnots = 2;
  std::size_t gen_singles = 0;
};

/// Executes one command; diagnostics go to `err`, results to `out` when no
/// output path is set. Returns one of the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with subcommands compile|verify|stats|diagram|generate and runs.
int main(int argc, char** argv);

/// Parses "identity", "enumerate" or a comma-separated permutation.
void parse_initial(const std::string& text, RunConfig& config);

} // namespace qroute::cli
