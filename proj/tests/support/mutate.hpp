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

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dialg/term.hpp"

namespace dialg::testing {

/// One application of a structural-congruence axiom at a random position:
/// alpha-conversion, commutativity or unit of parallel, scope extension,
/// restriction of the empty process, and swapping adjacent restrictions.
/// Summand order is also permuted.
Term congruence_step(const Term& t, std::mt19937_64& rng);

/// Expansion of a parallel composition of sums into one sum of prefixed
/// terms (strongly bisimilar, not congruent). Returns t when inapplicable.
Term expand(const Term& t);

struct LabelledPair {
  Term left;
  Term right;
  std::string kind;
};

/// Deterministic mix of related pairs: congruent variants, duplicated
/// summands, expansions, perturbed prefixes, dropped summands, unrelated.
std::vector<LabelledPair> related_pairs(std::uint64_t seed, std::size_t count, std::size_t size_bound,
                                        Calculus calculus, const std::vector<Name>& channels = {"a", "b", "c"});

/// Hand-picked pi pairs whose behaviour hinges on restricted names being
/// sent out of their scope.
std::vector<LabelledPair> extrusion_pairs();

}  // namespace dialg::testing
