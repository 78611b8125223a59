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

#include <set>

#include "dialg/canonical.hpp"

// Reaction-rule machinery shared by the CCS and pi dialgebras. The two
// calculi differ only in how a matched output/input pair synchronises.
namespace dialg::detail {

enum class SyncRule { Syn, Com };

std::set<CanonicalTerm> react_unary(const CanonicalTerm& p, SyncRule rule);
std::set<CanonicalTerm> react_binary(const CanonicalTerm& p, const CanonicalTerm& q, SyncRule rule);

/// Unrestricted top-level channels of a normal form, by polarity.
struct Ports {
  std::set<Name> in, out;
};

Ports ports(const Term& t);
/// False when no (syn)/(com) instance can match p against q.
bool may_react(const Ports& p, const Ports& q);

void require_calculus(const Term& t, Calculus c, const char* op);

}  // namespace dialg::detail
