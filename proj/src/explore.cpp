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

#include <algorithm>

#include "dialg/ccs.hpp"
#include "dialg/engine.hpp"
#include "dialg/pi.hpp"
#include "reaction.hpp"

namespace dialg {

std::string to_string(const ChallengerPolicy& policy) {
  if (const auto* c = std::get_if<BoundedClosure>(&policy)) return "closure:" + std::to_string(c->rounds);
  return "witness";
}

std::vector<CanonicalTerm> witness_terms(Semantics semantics, const NamePool& pool) {
  std::vector<CanonicalTerm> out;
  for (const auto& a : pool.names()) {
    if (semantics == Semantics::CcsDialg) {
      out.push_back(canonicalize(Term::prefixed(Prefix::ccs_out(a), Term::nil())));
      out.push_back(canonicalize(Term::prefixed(Prefix::ccs_in(a), Term::nil())));
    } else {
      for (const auto& b : pool.names())
        out.push_back(canonicalize(Term::prefixed(Prefix::pi_out(a, b), Term::nil())));
      Term fwd = Term::prefixed(Prefix::pi_out("y", "y"), Term::nil());
      out.push_back(canonicalize(Term::prefixed(Prefix::pi_in(a, "y"), fwd)));
      // Probing receiver: also listens on the received name.
      Term echo = Term::prefixed(Prefix::pi_out("z", "z"), Term::nil());
      Term probe = Term::sum({{Prefix::pi_out("y", "y"), Term::nil()}, {Prefix::pi_in("y", "z"), echo}});
      out.push_back(canonicalize(Term::prefixed(Prefix::pi_in(a, "y"), probe)));
    }
  }
  return out;
}

namespace {

class Explorer {
 public:
  Explorer(Semantics semantics, std::size_t max_states) : semantics_(semantics), max_states_(max_states) {}

  // Reaction results stay in the calculus, so only added terms are checked.
  StateId add_checked(const CanonicalTerm& t) {
    detail::require_calculus(t.term(), semantics_ == Semantics::CcsDialg ? Calculus::Ccs : Calculus::Pi, "explore");
    return add(t);
  }

  DialgebraTable table;

  StateId add(const CanonicalTerm& t) { return table.space.intern(t).first; }

  detail::SyncRule rule() const {
    return semantics_ == Semantics::CcsDialg ? detail::SyncRule::Syn : detail::SyncRule::Com;
  }

  bool over_budget() {
    if (table.space.size() > max_states_) table.budget_exhausted = true;
    return table.budget_exhausted;
  }

  void record_unary(StateId s) {
    if (table.unary.count(s)) return;
    const CanonicalTerm& p = table.space[s];
    auto rs = detail::react_unary(p, rule());
    StateSet ids;
    for (const auto& r : rs) ids.insert(add(r));
    table.unary.emplace(s, std::move(ids));
  }

  const detail::Ports& ports_of(StateId s) {
    while (ports_.size() <= s) ports_.push_back(detail::ports(table.space[ports_.size()].term()));
    return ports_[s];
  }

  void record_binary(StateId s, StateId t) {
    if (table.binary.contains(s, t)) return;
    ports_of(std::max(s, t));
    if (!detail::may_react(ports_[s], ports_[t])) {
      table.binary.emplace({s, t}, {});
      return;
    }
    // The binary rules are symmetric.
    if (const StateSet* m = table.binary.find(t, s)) {
      table.binary.emplace({s, t}, *m);
      return;
    }
    const CanonicalTerm& p = table.space[s];
    const CanonicalTerm& q = table.space[t];
    auto rs = detail::react_binary(p, q, rule());
    StateSet ids;
    for (const auto& r : rs) ids.insert(add(r));
    table.binary.emplace({s, t}, std::move(ids));
  }

  // Unary results for every state, transitively.
  bool close_unary(StateId& cursor) {
    for (; cursor < table.space.size(); ++cursor) {
      if (over_budget()) return false;
      record_unary(cursor);
    }
    return !over_budget();
  }

 private:
  Semantics semantics_;
  std::size_t max_states_;
  std::vector<detail::Ports> ports_;
};

void finish(DialgebraTable& table) {
  if (!table.budget_exhausted) return;
  table.unary_complete = table.unary.size() == table.space.size();
  table.binary_complete = false;
}

}  // namespace

DialgebraTable explore(const std::vector<CanonicalTerm>& initials, Semantics semantics,
                       const ChallengerPolicy& policy, std::size_t max_states) {
  Explorer ex(semantics, max_states);
  for (const auto& t : initials) ex.add_checked(t);

  if (const auto* ws = std::get_if<WitnessSet>(&policy)) {
    std::vector<StateId> witnesses;
    for (const auto& w : witness_terms(semantics, ws->pool)) witnesses.push_back(ex.add(w));
    for (StateId s = 0; s < ex.table.space.size(); ++s) {
      if (ex.over_budget()) break;
      ex.record_unary(s);
      for (StateId w : witnesses) {
        ex.record_binary(s, w);
        ex.record_binary(w, s);
      }
    }
    finish(ex.table);
    return std::move(ex.table);
  }

  const auto& bc = std::get<BoundedClosure>(policy);
  if (bc.seeds)
    for (const auto& w : witness_terms(semantics, *bc.seeds)) ex.add(w);
  StateId cursor = 0;
  std::size_t paired = 0;
  for (std::size_t round = 0; round < bc.rounds; ++round) {
    if (!ex.close_unary(cursor)) break;
    const std::size_t n = ex.table.space.size();
    paired = n;
    for (StateId s = 0; s < n && !ex.over_budget(); ++s)
      for (StateId t = 0; t < n && !ex.over_budget(); ++t) ex.record_binary(s, t);
    if (ex.over_budget()) break;
  }
  ex.close_unary(cursor);
  ex.table.binary_complete = !ex.table.budget_exhausted && paired == ex.table.space.size();
  finish(ex.table);
  return std::move(ex.table);
}

LtsTable explore_lts(const std::vector<CanonicalTerm>& initials, const LtsStep& step, std::size_t max_states) {
  LtsTable table;
  for (const auto& t : initials) table.space.intern(t);
  for (StateId s = 0; s < table.space.size(); ++s) {
    if (table.space.size() > max_states) {
      table.budget_exhausted = true;
      break;
    }
    const CanonicalTerm p = table.space[s];
    auto& out = table.trans[s];
    for (const auto& [label, t] : step(p)) out.emplace(label, table.space.intern(t).first);
  }
  return table;
}

LtsStep ccs_lts_step() {
  return [](const CanonicalTerm& p) {
    std::vector<std::pair<std::string, CanonicalTerm>> out;
    for (const auto& [l, t] : lts_step(p)) out.emplace_back(l.to_string(), t);
    return out;
  };
}

LtsStep pi_early_step(const NamePool& pool) {
  return [pool](const CanonicalTerm& p) {
    std::vector<std::pair<std::string, CanonicalTerm>> out;
    for (const auto& [l, t] : early_step(p, pool)) out.emplace_back(l.to_string(), t);
    return out;
  };
}

}  // namespace dialg
