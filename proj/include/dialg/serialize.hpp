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

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dialg/pool.hpp"
#include "dialg/table.hpp"

namespace dialg {

/// Serializable view of a run: explored states, recorded results, and an
/// optional verdict. Arrays are kept in ascending order.
struct Document {
  std::vector<std::string> states;
  std::vector<std::pair<StateId, std::vector<StateId>>> unary;
  std::vector<std::tuple<StateId, StateId, std::vector<StateId>>> binary;
  std::vector<std::tuple<StateId, std::string, StateId>> lts;
  std::vector<std::vector<StateId>> partition;
  std::optional<std::string> verdict;
  std::optional<std::string> policy;
  std::vector<Name> pool;
  bool budget_exhausted = false;

  friend bool operator==(const Document&, const Document&) = default;
};

Document document(const DialgebraTable& table);
Document document(const LtsTable& table);
void set_partition(Document& doc, const Partition& p);

std::string to_json(const Document& doc);
/// Throws Error on malformed input.
Document parse_json(const std::string& text);

/// Rebuild tables; states are re-read and must already be canonical.
DialgebraTable dialgebra_of(const Document& doc);
LtsTable lts_of(const Document& doc);
Partition partition_of(const Document& doc);

std::string to_dot(const Document& doc);
std::string to_text(const Document& doc);

}  // namespace dialg
