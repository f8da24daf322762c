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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qroute {

/// Malformed QASM or coupling input. Line/column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Routing could not place a two-qubit gate on the coupling graph.
class RoutingError : public std::runtime_error {
public:
  enum class Kind { NoEdge, NoPath, AllUnreachable };

  RoutingError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

} // namespace qroute
