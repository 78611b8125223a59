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

#include "dialg/bridge.hpp"

#include <map>
#include <string>

namespace dialg {

namespace {

StateId witness_id(const DialgebraTable& table, const Prefix& prefix) {
  CanonicalTerm w = canonicalize(Term::prefixed(prefix, Term::nil()));
  auto id = table.space.find(w.rendering());
  if (!id) throw MissingWitness("witness state " + w.rendering() + " is not in the table");
  return *id;
}

std::set<std::string> renderings(const std::set<CanonicalTerm>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.rendering());
  return out;
}

std::set<std::string> renderings(const StateSpace& space, const StateSet& ids) {
  std::set<std::string> out;
  for (StateId s : ids) out.insert(space[s].rendering());
  return out;
}

}  // namespace

std::set<LabelledExperiment> lambda_map(const DialgebraTable& table, StateId x, const NamePool& pool) {
  std::set<LabelledExperiment> out{{CcsLabel::tau(), Experiment::unary(x)}};
  for (const auto& a : pool.names()) {
    out.emplace(CcsLabel::in(a), Experiment::binary(x, witness_id(table, Prefix::ccs_out(a))));
    out.emplace(CcsLabel::out(a), Experiment::binary(x, witness_id(table, Prefix::ccs_in(a))));
  }
  return out;
}

LabelledStates mu_map(const LabelledResultSet& q) {
  LabelledStates out;
  for (const auto& [l, xs] : q)
    for (StateId x : xs) out.emplace(l, x);
  return out;
}

std::set<CanonicalTerm> delta_unary(const std::set<CcsTransition>& p) {
  std::set<CanonicalTerm> out;
  for (const auto& [l, x] : p)
    if (l.kind == CcsLabel::Kind::Tau) out.insert(x);
  return out;
}

std::set<CanonicalTerm> delta_binary(const std::set<CcsTransition>& p1, const std::set<CcsTransition>& p2) {
  std::set<CanonicalTerm> out;
  for (const auto& [l1, x] : p1)
    for (const auto& [l2, y] : p2)
      if (l1.complements(l2)) out.insert(canonicalize(Term::par({x.term(), y.term()})));
  return out;
}

LtsTable derived_coalgebra(const DialgebraTable& table, const NamePool& pool) {
  LtsTable lts;
  lts.space = table.space;
  lts.budget_exhausted = table.budget_exhausted;
  for (const auto& [x, _] : table.unary) {
    LabelledResultSet q;
    for (const auto& [l, e] : lambda_map(table, x, pool)) {
      const StateSet* rs = table.results(e);
      if (!rs) throw MissingWitness("experiment with witness not recorded");
      q.emplace(l, *rs);
    }
    auto& out = lts.trans[x];
    for (const auto& [l, y] : mu_map(q)) out.emplace(l.to_string(), y);
  }
  return lts;
}

DialgebraTable derived_dialgebra(const LtsTable& lts, const std::vector<std::pair<StateId, StateId>>& pairs) {
  DialgebraTable out;
  out.space = lts.space;
  std::map<StateId, std::set<CcsTransition>> steps;
  for (const auto& [s, ts] : lts.trans) {
    auto& dst = steps[s];
    for (const auto& [label, t] : ts) dst.emplace(CcsLabel::parse(label), lts.space[t]);
  }
  auto intern_all = [&](const std::set<CanonicalTerm>& rs) {
    StateSet ids;
    for (const auto& r : rs) ids.insert(out.space.intern(r).first);
    return ids;
  };
  for (const auto& [s, ts] : steps) out.unary.emplace(s, intern_all(delta_unary(ts)));
  for (const auto& [s, t] : pairs) {
    auto a = steps.find(s);
    auto b = steps.find(t);
    if (a == steps.end() || b == steps.end()) {
      out.binary_complete = false;
      continue;
    }
    out.binary.emplace(std::make_pair(s, t), intern_all(delta_binary(a->second, b->second)));
  }
  out.unary_complete = out.unary.size() == out.space.size();
  out.budget_exhausted = lts.budget_exhausted;
  return out;
}

ComparisonReport compare_semantics(const Term& p, const NamePool& pool, std::size_t max_states) {
  auto seen = calculus_of(p);
  if (seen && *seen != Calculus::Ccs) throw CalculusMismatch("compare_semantics expects a CCS term");
  ComparisonReport rep;
  rep.native_dialgebra = explore({canonicalize(p)}, Semantics::CcsDialg, WitnessSet{pool}, max_states);
  const DialgebraTable& dia = rep.native_dialgebra;
  if (dia.budget_exhausted) {
    rep.inconclusive = true;
    return rep;
  }
  const std::size_t n = dia.size();
  std::vector<std::set<CcsTransition>> steps(n);
  rep.native_lts.space = dia.space;
  for (StateId s = 0; s < n; ++s) {
    steps[s] = lts_step(dia.space[s]);
    auto& out = rep.native_lts.trans[s];
    for (const auto& [l, t] : steps[s]) out.emplace(l.to_string(), rep.native_lts.space.intern(t).first);
  }

  // Reactions from transitions.
  for (const auto& [s, rs] : dia.unary) {
    ++rep.experiments_checked;
    if (renderings(delta_unary(steps[s])) != renderings(dia.space, rs))
      rep.dialgebra_mismatches.push_back(Experiment::unary(s));
  }
  for (const auto& [e, rs] : dia.binary) {
    ++rep.experiments_checked;
    if (renderings(delta_binary(steps[e.first], steps[e.second])) != renderings(dia.space, rs))
      rep.dialgebra_mismatches.push_back(Experiment::binary(e.first, e.second));
  }

  // Transitions from reactions.
  LtsTable derived = derived_coalgebra(dia, pool);
  for (StateId s = 0; s < n; ++s) {
    ++rep.states_checked;
    std::set<std::pair<std::string, std::string>> native, recovered;
    for (const auto& [l, t] : steps[s]) native.emplace(l.to_string(), t.rendering());
    for (const auto& [l, t] : derived.trans[s]) recovered.emplace(l, derived.space[t].rendering());
    if (native != recovered) rep.coalgebra_mismatches.push_back(s);
  }
  return rep;
}

}  // namespace dialg
