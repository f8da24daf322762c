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

#include <string>
#include <string_view>
#include <vector>

#include "qroute/circuit.hpp"

namespace qroute {

struct ParsedCircuit {
  Circuit circuit;
  // One entry per skipped `measure`, `barrier` or `creg` statement.
  std::vector<std::string> warnings;
};

/// Parses the supported OpenQASM 2.0 subset: a single `qreg`, the gates
/// cx, h, t, tdg, s, sdg, x, z, swap with indexed operands. `measure`,
/// `barrier` and `creg` are skipped with a warning.
/// Throws ParseError carrying the line and column of the offending token.
ParsedCircuit parse_qasm(std::string_view text);

/// One statement per line under the standard header and a single `qreg q[N];`.
std::string to_qasm(const Circuit& circuit);

} // namespace qroute
