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

#include "qroute/search.hpp"
#include "qroute/verify.hpp"

namespace qroute {

/// Solution report. Configurations are written as to_hw arrays (entry i is the
/// vertex of circuit qubit i); "final_wire_to_qubit" gives the inverse view.
std::string solution_to_json(const Solution& solution,
                             const CompileOptions& options,
                             std::string_view strategy);

/// Reads a report written by solution_to_json. Throws ParseError.
Solution solution_from_json(std::string_view text);

std::string verification_to_json(const StructuralReport& structural,
                                 const SemanticReport& semantic);

} // namespace qroute
