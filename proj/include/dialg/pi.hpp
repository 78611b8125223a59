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

#include <compare>
#include <set>
#include <string>
#include <utility>

#include "dialg/canonical.hpp"
#include "dialg/pool.hpp"
#include "dialg/table.hpp"

namespace dialg {

struct PiLabel {
  enum class Kind { Tau, FreeIn, FreeOut, BoundOut };
  Kind kind = Kind::Tau;
  Name channel;
  Name datum;  // the received/sent name, or the fresh name of a bound output

  static PiLabel tau() { return {}; }
  static PiLabel free_in(Name a, Name b) { return {Kind::FreeIn, std::move(a), std::move(b)}; }
  static PiLabel free_out(Name a, Name b) { return {Kind::FreeOut, std::move(a), std::move(b)}; }
  static PiLabel bound_out(Name a, Name x) { return {Kind::BoundOut, std::move(a), std::move(x)}; }

  /// `tau`, `a b` (input), `~a b` (output), `~a(x)` (bound output).
  std::string to_string() const;

  auto operator<=>(const PiLabel&) const = default;
};

using PiTransition = std::pair<PiLabel, CanonicalTerm>;

/// Reactions of p alone: (com) replaces the CCS synchronisation rule.
std::set<CanonicalTerm> pi_dialg_unary(const CanonicalTerm& p);
std::set<CanonicalTerm> pi_dialg_binary(const CanonicalTerm& p, const CanonicalTerm& q);

/// Early transitions. Inputs are instantiated with every pool name; a bound
/// output uses the least `#k` not free in p, which must lie in the pool.
/// Throws PoolTooSmall when the pool misses a free name of p, offers no
/// name outside fn(p), or cannot supply the bound-output name.
std::set<PiTransition> early_step(const CanonicalTerm& p, const NamePool& pool);

enum class Polarity { In, Out };
using Barb = std::pair<Name, Polarity>;

/// Channels on which p can immediately communicate.
std::set<Barb> barbs(const CanonicalTerm& p);

/// Strong barbed bisimilarity on an explored table, reading the unary
/// results as the tau-successors.
Partition barbed_bisim(const DialgebraTable& table);

}  // namespace dialg
