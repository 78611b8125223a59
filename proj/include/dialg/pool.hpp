/*
 * Copyright 2026 The dialg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "dialg/term.hpp"

namespace dialg {

class PoolTooSmall : public Error {
 public:
  using Error::Error;
};

/// Finite set of channel names standing in for the countable name supply.
class NamePool {
 public:
  NamePool() = default;
  explicit NamePool(std::vector<Name> names);

  /// fn(system) plus `#0`...`#m`, m = number of restriction and input
  /// binders in the system plus one.
  static NamePool for_pi_system(const std::vector<Term>& system);
  /// fn(system) plus one fresh channel.
  static NamePool for_ccs_system(const std::vector<Term>& system);

  const std::vector<Name>& names() const { return names_; }
  bool contains(const Name& n) const;
  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }

  friend bool operator==(const NamePool&, const NamePool&) = default;

 private:
  std::vector<Name> names_;  // sorted, unique
};

}  // namespace dialg
