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

#include "qroute/configuration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qroute {
namespace {

std::vector<Qubit> invert(const std::vector<Qubit>& perm) {
  std::vector<Qubit> inv(perm.size(), std::numeric_limits<Qubit>::max());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || inv[perm[i]] != std::numeric_limits<Qubit>::max())
      throw std::invalid_argument("configuration is not a permutation");
    inv[perm[i]] = static_cast<Qubit>(i);
  }
  return inv;
}

} // namespace

Configuration Configuration::identity(std::size_t n) {
  std::vector<Qubit> p(n);
  std::iota(p.begin(), p.end(), Qubit{0});
  return from_to_hw(std::move(p));
}

Configuration Configuration::from_to_hw(std::vector<Qubit> to_hw) {
  Configuration c;
  c.to_circ_ = invert(to_hw);
  c.to_hw_ = std::move(to_hw);
  return c;
}

Configuration Configuration::from_to_circ(std::vector<Qubit> to_circ) {
  Configuration c;
  c.to_hw_ = invert(to_circ);
  c.to_circ_ = std::move(to_circ);
  return c;
}

Configuration Configuration::swapped(Qubit hw_a, Qubit hw_b) const {
  Configuration out = *this;
  out.swap_in_place(hw_a, hw_b);
  return out;
}

void Configuration::swap_in_place(Qubit hw_a, Qubit hw_b) {
  if (hw_a >= size() || hw_b >= size())
    throw std::out_of_range("swap vertex out of range");
  if (hw_a == hw_b)
    throw std::invalid_argument("swap needs two distinct vertices");
  const Qubit qa = to_circ_[hw_a];
  const Qubit qb = to_circ_[hw_b];
  std::swap(to_circ_[hw_a], to_circ_[hw_b]);
  to_hw_[qa] = hw_b;
  to_hw_[qb] = hw_a;
}

bool Configuration::next_permutation() {
  const bool more = std::next_permutation(to_hw_.begin(), to_hw_.end());
  to_circ_ = invert(to_hw_);
  return more;
}

std::string Configuration::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < to_hw_.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(to_hw_[i]);
  }
  return s + "]";
}

std::size_t factorial_saturating(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::size_t>::max() / i)
      return std::numeric_limits<std::size_t>::max();
    f *= i;
  }
  return f;
}

} // namespace qroute
