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

#include "dialg/engine.hpp"

namespace dialg {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::CcsDialg: return "ccs_dialg";
    case Mode::CcsLts: return "ccs_lts";
    case Mode::PiDialg: return "pi_dialg";
    case Mode::PiEarly: return "pi_early";
  }
  return {};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Bisimilar: return "bisimilar";
    case Verdict::NotBisimilar: return "not_bisimilar";
    case Verdict::Unknown: return "unknown";
  }
  return {};
}

namespace {

Calculus calculus_of_mode(Mode m) {
  return m == Mode::CcsDialg || m == Mode::CcsLts ? Calculus::Ccs : Calculus::Pi;
}

void require(const Term& t, Calculus c) {
  auto seen = calculus_of(t);
  if (seen && *seen != c) throw CalculusMismatch(std::string("term is not a ") + to_string(c) + " term");
}

}  // namespace

NamePool default_pool(Mode mode, const std::vector<Term>& system) {
  return calculus_of_mode(mode) == Calculus::Ccs ? NamePool::for_ccs_system(system)
                                                  : NamePool::for_pi_system(system);
}

BisimResult bisimilar(const Term& p, const Term& q, Mode mode, const BisimOptions& opts) {
  const Calculus calc = calculus_of_mode(mode);
  require(p, calc);
  require(q, calc);
  BisimResult res;
  res.pool = opts.pool ? *opts.pool : default_pool(mode, {p, q});
  res.policy = opts.policy ? *opts.policy : ChallengerPolicy(WitnessSet{res.pool});
  const std::vector<CanonicalTerm> initials{canonicalize(p), canonicalize(q)};

  bool exhausted = false;
  if (mode == Mode::CcsDialg || mode == Mode::PiDialg) {
    auto sem = mode == Mode::CcsDialg ? Semantics::CcsDialg : Semantics::PiDialg;
    DialgebraTable t = explore(initials, sem, res.policy, opts.max_states);
    exhausted = t.budget_exhausted;
    res.partition = refine_dialgebra(t);
    res.table = std::move(t);
  } else {
    LtsStep step = mode == Mode::CcsLts ? ccs_lts_step() : pi_early_step(res.pool);
    LtsTable t = explore_lts(initials, step, opts.max_states);
    exhausted = t.budget_exhausted;
    res.partition = refine_lts(t);
    res.table = std::move(t);
  }
  const StateSpace& space =
      std::visit([](const auto& t) -> const StateSpace& { return t.space; }, res.table);
  res.left = *space.find(initials[0].rendering());
  res.right = *space.find(initials[1].rendering());
  if (exhausted)
    res.verdict = Verdict::Unknown;
  else
    res.verdict = res.partition.same_block(res.left, res.right) ? Verdict::Bisimilar : Verdict::NotBisimilar;
  return res;
}

}  // namespace dialg
