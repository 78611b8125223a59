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

namespace dialg {

struct CcsLabel {
  enum class Kind { Tau, In, Out };
  Kind kind = Kind::Tau;
  Name channel;

  static CcsLabel tau() { return {}; }
  static CcsLabel in(Name a) { return {Kind::In, std::move(a)}; }
  static CcsLabel out(Name a) { return {Kind::Out, std::move(a)}; }
  /// Inverse of to_string: `tau`, `a`, `~a`.
  static CcsLabel parse(const std::string& text);

  bool complements(const CcsLabel& other) const;
  std::string to_string() const;

  auto operator<=>(const CcsLabel&) const = default;
};

using CcsTransition = std::pair<CcsLabel, CanonicalTerm>;

/// One-step transitions of the CCS labelled semantics.
std::set<CcsTransition> lts_step(const CanonicalTerm& p);

/// { z | p -> z } under the CCS reaction rules.
std::set<CanonicalTerm> dialg_unary(const CanonicalTerm& p);

/// { z | (p, q) -> z } under the CCS reaction rules.
std::set<CanonicalTerm> dialg_binary(const CanonicalTerm& p, const CanonicalTerm& q);

}  // namespace dialg
