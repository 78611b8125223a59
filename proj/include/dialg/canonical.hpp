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
#include <string>
#include <vector>

#include "dialg/term.hpp"

namespace dialg {

/// Structural-congruence normal form. The outer spine is a run of
/// restrictions over a parallel composition of non-empty sums; every binder
/// is named `#k` by first occurrence in the rendering. Equality is equality
/// of renderings.
class CanonicalTerm {
 public:
  CanonicalTerm() : rendering_("0") {}

  const Term& term() const { return term_; }
  const std::string& rendering() const { return rendering_; }

  friend bool operator==(const CanonicalTerm& a, const CanonicalTerm& b) {
    return a.rendering_ == b.rendering_;
  }
  friend std::strong_ordering operator<=>(const CanonicalTerm& a, const CanonicalTerm& b) {
    return a.rendering_ <=> b.rendering_;
  }

 private:
  friend CanonicalTerm canonicalize(const Term& t);
  CanonicalTerm(Term t, std::string r) : term_(std::move(t)), rendering_(std::move(r)) {}

  Term term_;
  std::string rendering_;
};

CanonicalTerm canonicalize(const Term& t);

/// Canonical-form identity. Throws CalculusMismatch for CCS against pi.
bool congruent(const Term& p, const Term& q);

/// Restriction spine of a normal form: the restricted names and the
/// parallel components (each a non-empty sum) beneath them.
struct Spine {
  std::vector<Name> restricted;
  std::vector<Term> components;
};

Spine strip_spine(const Term& t);

}  // namespace dialg
