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
#include <vector>

#include "dialg/term.hpp"

namespace dialg {

/// Deterministic pseudo-random guarded terms with term_size <= size_bound,
/// over the given channels (defaults to a, b, c).
std::vector<Term> gen_corpus(std::uint64_t seed, std::size_t count, std::size_t size_bound, Calculus calculus,
                             const std::vector<Name>& channels = {"a", "b", "c"});

}  // namespace dialg
