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
#include <utility>
#include <vector>

#include "dialg/ccs.hpp"
#include "dialg/engine.hpp"

namespace dialg {

class MissingWitness : public Error {
 public:
  using Error::Error;
};

using LabelledExperiment = std::pair<CcsLabel, Experiment>;
using LabelledResultSet = std::set<std::pair<CcsLabel, StateSet>>;
using LabelledStates = std::set<std::pair<CcsLabel, StateId>>;

/// {(tau, x)} plus (a, (x, ~a.0)) and (~a, (x, a.0)) for every pool name.
/// The witness states must already be in the table.
std::set<LabelledExperiment> lambda_map(const DialgebraTable& table, StateId x, const NamePool& pool);

/// Flattens labelled result sets into labelled states.
LabelledStates mu_map(const LabelledResultSet& q);

/// tau-successors of one transition set.
std::set<CanonicalTerm> delta_unary(const std::set<CcsTransition>& p);
/// Parallel compositions x | y of complementary successors.
std::set<CanonicalTerm> delta_binary(const std::set<CcsTransition>& p1, const std::set<CcsTransition>& p2);

/// Transitions recovered from a dialgebra explored over `pool` witnesses.
LtsTable derived_coalgebra(const DialgebraTable& table, const NamePool& pool);

/// Reactions recovered from transitions: every state of `lts` with recorded
/// transitions gets a unary result, every listed pair a binary one.
DialgebraTable derived_dialgebra(const LtsTable& lts, const std::vector<std::pair<StateId, StateId>>& pairs);

struct ComparisonReport {
  bool inconclusive = false;
  DialgebraTable native_dialgebra;
  LtsTable native_lts;
  /// Recorded experiments whose native results differ from the derived ones.
  std::vector<Experiment> dialgebra_mismatches;
  /// States whose native transitions differ from the derived ones.
  std::vector<StateId> coalgebra_mismatches;
  std::size_t experiments_checked = 0;
  std::size_t states_checked = 0;

  bool pass() const { return !inconclusive && dialgebra_mismatches.empty() && coalgebra_mismatches.empty(); }
};

/// Explores p under the CCS dialgebra with pool witnesses and checks both
/// derivations experiment by experiment.
ComparisonReport compare_semantics(const Term& p, const NamePool& pool, std::size_t max_states = 20000);

}  // namespace dialg
