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

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dialg/canonical.hpp"
#include "dialg/pool.hpp"
#include "dialg/table.hpp"

namespace dialg {

enum class Semantics { CcsDialg, PiDialg };

/// Binary experiments of every state against a fixed set of witness terms.
struct WitnessSet {
  NamePool pool;
};

/// Binary experiments between all current states, repeated `rounds` times.
/// With `seeds`, the witness terms of that pool join the initial states.
struct BoundedClosure {
  std::size_t rounds = 1;
  std::optional<NamePool> seeds;
};

using ChallengerPolicy = std::variant<WitnessSet, BoundedClosure>;

std::string to_string(const ChallengerPolicy& policy);

/// CCS: ~a.0 and a.0 for each pool name. pi: a<b>.0 for each pool pair,
/// the forwarding receiver a(y).y<y>.0 and the probing receiver
/// a(y).(y<y>.0 + y(z).z<z>.0) for each pool name.
std::vector<CanonicalTerm> witness_terms(Semantics semantics, const NamePool& pool);

DialgebraTable explore(const std::vector<CanonicalTerm>& initials, Semantics semantics,
                       const ChallengerPolicy& policy, std::size_t max_states = 20000);

using LtsStep = std::function<std::vector<std::pair<std::string, CanonicalTerm>>(const CanonicalTerm&)>;

LtsTable explore_lts(const std::vector<CanonicalTerm>& initials, const LtsStep& step,
                     std::size_t max_states = 20000);
LtsStep ccs_lts_step();
LtsStep pi_early_step(const NamePool& pool);

/// Coarsest partition satisfying the back-and-forth condition on the
/// recorded experiments. `rounds` receives the number of splitting rounds.
Partition refine_dialgebra(const DialgebraTable& table, std::size_t* rounds = nullptr);
/// Coarsest strong bisimulation.
Partition refine_lts(const LtsTable& table, std::size_t* rounds = nullptr);

/// Unary results of equal blocks have equal block images, and recorded
/// binary experiments over equal blocks have equal block images.
bool satisfies_back_and_forth(const DialgebraTable& table, const Partition& p);

/// States are blocks, represented by their least member.
DialgebraTable quotient(const DialgebraTable& table, const Partition& p);
/// The block map commutes with the results of every recorded experiment.
bool is_homomorphism(const DialgebraTable& table, const Partition& p, const DialgebraTable& q);

class TooManyStates : public Error {
 public:
  using Error::Error;
};

/// Enumerates every equivalence relation (at most 6 states) and returns the
/// unique coarsest one satisfying the back-and-forth condition.
Partition brute_force_bisim(const DialgebraTable& table);

enum class Mode { CcsDialg, CcsLts, PiDialg, PiEarly };
enum class Verdict { Bisimilar, NotBisimilar, Unknown };

std::string to_string(Mode m);
std::string to_string(Verdict v);

struct BisimOptions {
  std::optional<ChallengerPolicy> policy;  // default: WitnessSet over the pool
  std::optional<NamePool> pool;            // default: sized from the pair
  std::size_t max_states = 20000;
};

struct BisimResult {
  Verdict verdict = Verdict::Unknown;
  Partition partition;
  std::variant<DialgebraTable, LtsTable> table;
  StateId left = 0;
  StateId right = 0;
  NamePool pool;
  ChallengerPolicy policy;
};

/// Default pool for a system under a mode.
NamePool default_pool(Mode mode, const std::vector<Term>& system);

BisimResult bisimilar(const Term& p, const Term& q, Mode mode, const BisimOptions& opts = {});

}  // namespace dialg
