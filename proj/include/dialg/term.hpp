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

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dialg {

using Name = std::string;
using NameSet = std::set<Name>;

enum class Calculus { Ccs, Pi };

const char* to_string(Calculus c);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class CalculusMismatch : public Error {
 public:
  using Error::Error;
};

/// True for user-level channel names: `[a-z][a-zA-Z0-9_]*` minus `tau`/`nu`.
bool is_user_name(const std::string& s);

/// Names produced internally (`#0`, `#1`, ...). Never collide with user names.
bool is_internal_name(const std::string& s);

struct Prefix {
  enum class Kind { Tau, CcsIn, CcsOut, PiIn, PiOut };

  Kind kind = Kind::Tau;
  Name channel;  // empty for Tau
  Name object;   // PiIn: the binder, PiOut: the datum

  static Prefix tau() { return {}; }
  static Prefix ccs_in(Name a) { return {Kind::CcsIn, std::move(a), {}}; }
  static Prefix ccs_out(Name a) { return {Kind::CcsOut, std::move(a), {}}; }
  static Prefix pi_in(Name a, Name x) { return {Kind::PiIn, std::move(a), std::move(x)}; }
  static Prefix pi_out(Name a, Name b) { return {Kind::PiOut, std::move(a), std::move(b)}; }

  bool is_tau() const { return kind == Kind::Tau; }
  bool is_input() const { return kind == Kind::CcsIn || kind == Kind::PiIn; }
  bool is_output() const { return kind == Kind::CcsOut || kind == Kind::PiOut; }
  std::optional<Calculus> calculus() const;

  auto operator<=>(const Prefix&) const = default;
};

struct Summand;

/// Process term. Sum with no summands is the empty process; Par has at
/// least two components and never directly contains another Par.
class Term {
 public:
  enum class Kind { Sum, Par, Nu };

  Term() = default;

  static Term nil() { return Term(); }
  static Term sum(std::vector<Summand> summands);
  static Term prefixed(Prefix prefix, Term continuation);
  /// Flattens nested Par; zero components give nil, one gives the component.
  static Term par(std::vector<Term> components);
  static Term nu(Name binder, Term body);
  /// (nu b1)...(nu bn) over the parallel composition of `components`.
  static Term restrict(const std::vector<Name>& binders, std::vector<Term> components);

  Kind kind() const { return kind_; }
  bool is_nil() const { return kind_ == Kind::Sum && summands_.empty(); }
  const std::vector<Summand>& summands() const { return summands_; }
  const std::vector<Term>& components() const { return children_; }
  const Name& binder() const { return binder_; }
  const Term& body() const { return children_.front(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  Kind kind_ = Kind::Sum;
  std::vector<Summand> summands_;
  std::vector<Term> children_;
  Name binder_;
};

struct Summand {
  Prefix prefix;
  Term continuation;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Calculus implied by the prefixes of `t`; nullopt when `t` only uses tau
/// (such terms belong to both). Throws CalculusMismatch on mixed prefixes.
std::optional<Calculus> calculus_of(const Term& t);

NameSet free_names(const Term& t);
/// Every name occurring in `t`, free or bound.
NameSet all_names(const Term& t);

/// Capture-avoiding t[datum/var].
Term substitute(const Term& t, const Name& datum, const Name& var);

/// Alpha-renames every binder to a pairwise-distinct internal name outside
/// `avoid` and fn(t).
Term refresh_bound(const Term& t, const NameSet& avoid);

/// Least `#k` not contained in `used`.
Name fresh_name(const NameSet& used);

/// Number of prefixes, restrictions and parallel operators.
std::size_t term_size(const Term& t);
std::size_t prefix_count(const Term& t);
std::size_t binder_count(const Term& t);

std::string pretty(const Term& t);
std::string pretty(const Prefix& p);

/// Parses the concrete syntax. `allow_internal` additionally accepts `#k`
/// names, which is how machine-written renderings are read back.
Term parse_term(const std::string& text, Calculus calculus, bool allow_internal = false);
/// Parses under whichever calculus accepts the text (CCS tried first).
Term parse_any(const std::string& text, bool allow_internal = true);

}  // namespace dialg
