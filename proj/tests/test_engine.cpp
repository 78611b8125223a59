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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dialg/corpus.hpp"
#include "dialg/engine.hpp"

using namespace dialg;

namespace {

CanonicalTerm c(const char* s) { return canonicalize(parse_term(s, Calculus::Ccs)); }
CanonicalTerm p(const char* s) { return canonicalize(parse_term(s, Calculus::Pi)); }

// Arbitrary distinct placeholder states.
DialgebraTable blank(std::size_t n) {
  DialgebraTable t;
  for (std::size_t i = 0; i < n; ++i) t.space.intern(c(("s" + std::to_string(i) + ".0").c_str()));
  return t;
}

const StateSet& binary(const DialgebraTable& t, const char* l, const char* r) {
  auto ls = t.space.find(l);
  auto rs = t.space.find(r);
  REQUIRE(ls);
  REQUIRE(rs);
  const StateSet* out = t.results(Experiment::binary(*ls, *rs));
  REQUIRE(out);
  return *out;
}

bool has_state(const DialgebraTable& t, const StateSet& s, const char* rendering) {
  auto id = t.space.find(rendering);
  return id && s.count(*id);
}

}  // namespace

TEST_CASE("witness terms") {
  auto ccs = witness_terms(Semantics::CcsDialg, NamePool({"a"}));
  REQUIRE(ccs.size() == 2);
  CHECK(ccs[0].rendering() == "~a.0");
  CHECK(ccs[1].rendering() == "a.0");
  auto pi = witness_terms(Semantics::PiDialg, NamePool({"a", "b"}));
  CHECK(pi.size() == 8);
  CHECK(pi[0].rendering() == "a<a>.0");
  CHECK(pi[2].rendering() == "a(#0).#0<#0>.0");
  CHECK(pi[3].rendering() == "a(#0).(#0(#1).#1<#1>.0 + #0<#0>.0)");
}

TEST_CASE("explore") {
  DialgebraTable nil = explore({c("0")}, Semantics::CcsDialg, WitnessSet{NamePool({"a"})});
  CHECK(nil.size() == 3);
  CHECK(nil.results(Experiment::unary(0))->empty());
  CHECK(nil.unary_complete);
  CHECK(nil.binary_complete);

  DialgebraTable redex = explore({c("a.0 | ~a.0")}, Semantics::CcsDialg, WitnessSet{NamePool({"a"})});
  const StateSet* u = redex.results(Experiment::unary(0));
  REQUIRE(u);
  CHECK(u->size() == 1);
  CHECK(redex.space[*u->begin()].rendering() == "0");
  CHECK(has_state(redex, binary(redex, "a.0 | ~a.0", "~a.0"), "~a.0"));
  CHECK(has_state(redex, binary(redex, "~a.0", "a.0"), "0"));

  DialgebraTable ext = explore({p("nu x. a<x>.0"), p("a(y).0")}, Semantics::PiDialg, BoundedClosure{1, std::nullopt});
  CHECK(has_state(ext, binary(ext, "nu #0. a<#0>.0", "a(#0).0"), "0"));
  CHECK_FALSE(ext.binary_complete);

  DialgebraTable cut = explore({c("a.b.c.0")}, Semantics::CcsDialg, WitnessSet{NamePool({"a", "b", "c"})}, 3);
  CHECK(cut.budget_exhausted);
  CHECK_FALSE(cut.binary_complete);
}

TEST_CASE("refine_dialgebra on hand-built tables") {
  DialgebraTable quiet = blank(3);
  for (StateId s = 0; s < 3; ++s) quiet.unary[s] = {};
  CHECK(refine_dialgebra(quiet).num_blocks() == 1);

  // g(x,x) = {x}, g(x,y) empty otherwise: no two states are bisimilar.
  DialgebraTable g = blank(3);
  for (StateId x = 0; x < 3; ++x) {
    g.unary[x] = {};
    for (StateId y = 0; y < 3; ++y) g.binary[{x, y}] = x == y ? StateSet{x} : StateSet{};
  }
  CHECK(refine_dialgebra(g) == Partition::discrete(3));
  CHECK(brute_force_bisim(g) == Partition::discrete(3));

  // Two states stepping to distinct deadlocks, one of which is probed.
  DialgebraTable h = blank(4);
  h.unary[0] = {2};
  h.unary[1] = {3};
  h.unary[2] = {};
  h.unary[3] = {};
  h.binary[{2, 2}] = {2};
  h.binary[{3, 3}] = {};
  h.binary[{2, 3}] = {};
  h.binary[{3, 2}] = {};
  Partition r = refine_dialgebra(h);
  CHECK(r == brute_force_bisim(h));
  CHECK_FALSE(r.same_block(0, 1));
  CHECK(satisfies_back_and_forth(h, r));
}

TEST_CASE("brute force limits") {
  CHECK(brute_force_bisim(blank(1)).num_blocks() == 1);
  CHECK_THROWS_AS(brute_force_bisim(blank(7)), TooManyStates);
}

TEST_CASE("refine_lts") {
  auto lts = [](const char* l, const char* r) {
    LtsTable t = explore_lts({c(l), c(r)}, ccs_lts_step());
    return refine_lts(t).same_block(0, 1);
  };
  CHECK(lts("0", "nu a. a.0"));
  CHECK(lts("a.0 | ~b.0", "a.~b.0 + ~b.a.0"));
  CHECK_FALSE(lts("a.0 | ~a.0", "a.~a.0 + ~a.a.0"));
  CHECK(lts("a.0 | ~a.0", "a.~a.0 + ~a.a.0 + tau.0"));
  std::size_t rounds = 0;
  LtsTable t = explore_lts({c("a.b.0 + a.c.0"), c("a.(b.0 + c.0)")}, ccs_lts_step());
  Partition part = refine_lts(t, &rounds);
  CHECK_FALSE(part.same_block(0, 1));
  CHECK(rounds <= t.size());
}

TEST_CASE("quotient") {
  DialgebraTable t = explore({c("a.0 + a.0"), c("a.0")}, Semantics::CcsDialg, WitnessSet{NamePool({"a", "#0"})});
  Partition part = refine_dialgebra(t);
  CHECK(part.same_block(0, 1));
  DialgebraTable q = quotient(t, part);
  CHECK(q.size() == part.num_blocks());
  CHECK(is_homomorphism(t, part, q));

  DialgebraTable iso = quotient(t, Partition::discrete(t.size()));
  CHECK(iso.size() == t.size());
  CHECK(is_homomorphism(t, Partition::discrete(t.size()), iso));

  DialgebraTable one = blank(2);
  one.unary[0] = {1};
  one.unary[1] = {0};
  DialgebraTable single = quotient(one, Partition::single(2));
  REQUIRE(single.size() == 1);
  CHECK(*single.results(Experiment::unary(0)) == StateSet{0});
}

TEST_CASE("bisimilar") {
  CHECK(bisimilar(parse_term("a.b.0 | c.0", Calculus::Ccs), parse_term("c.0 | a.b.0", Calculus::Ccs), Mode::CcsDialg)
            .verdict == Verdict::Bisimilar);
  for (Mode m : {Mode::CcsDialg, Mode::CcsLts}) {
    CAPTURE(to_string(m));
    CHECK(bisimilar(parse_term("a.0 | ~b.0", Calculus::Ccs), parse_term("a.~b.0 + ~b.a.0", Calculus::Ccs), m).verdict ==
          Verdict::Bisimilar);
    CHECK(bisimilar(parse_term("a.0 | ~a.0", Calculus::Ccs), parse_term("a.~a.0 + ~a.a.0", Calculus::Ccs), m).verdict ==
          Verdict::NotBisimilar);
  }
  for (Mode m : {Mode::PiDialg, Mode::PiEarly}) {
    CAPTURE(to_string(m));
    CHECK(bisimilar(parse_term("a<b>.0", Calculus::Pi), parse_term("a<c>.0", Calculus::Pi), m).verdict ==
          Verdict::NotBisimilar);
    CHECK(bisimilar(parse_term("nu x. a<x>.0", Calculus::Pi), parse_term("nu y. (a<y>.0 | nu z. z<y>.0)", Calculus::Pi),
                    m)
              .verdict == Verdict::Bisimilar);
  }
  BisimOptions tight;
  tight.max_states = 3;
  CHECK(bisimilar(parse_term("a.b.c.0", Calculus::Ccs), parse_term("a.b.c.0 + a.b.c.0", Calculus::Ccs), Mode::CcsDialg,
                  tight)
            .verdict == Verdict::Unknown);
  CHECK_THROWS_AS(bisimilar(parse_term("a.0", Calculus::Ccs), parse_term("a<b>.0", Calculus::Pi), Mode::CcsDialg),
                  CalculusMismatch);
}

TEST_CASE("property: refinement is sound and matches brute force on small saturated tables") {
  int compared = 0;
  for (const auto& t : gen_corpus(61, 300, 5, Calculus::Ccs)) {
    DialgebraTable tab = explore({canonicalize(t)}, Semantics::CcsDialg, BoundedClosure{2, std::nullopt}, 200);
    if (tab.budget_exhausted) continue;
    std::size_t rounds = 0;
    Partition r = refine_dialgebra(tab, &rounds);
    CHECK(satisfies_back_and_forth(tab, r));
    CHECK(rounds <= tab.size() + 1);
    if (tab.size() <= 5 && tab.binary_complete) {
      CHECK(r == brute_force_bisim(tab));
      ++compared;
    }
  }
  CHECK(compared >= 50);
}

TEST_CASE("unsaturated tables may lack a coarsest partition") {
  // Only (0,0) and (1,1) are recorded; 2 is never probed.
  DialgebraTable t = blank(3);
  for (StateId s = 0; s < 3; ++s) t.unary[s] = {};
  t.binary[{0, 0}] = {0};
  t.binary[{1, 1}] = {};
  CHECK_THROWS_AS(brute_force_bisim(t), Error);
}

TEST_CASE("property: dialgebra and LTS modes coincide on CCS initials") {
  auto terms = gen_corpus(67, 120, 8, Calculus::Ccs);
  for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
    auto d = bisimilar(terms[i], terms[i + 1], Mode::CcsDialg);
    auto l = bisimilar(terms[i], terms[i + 1], Mode::CcsLts);
    CHECK(d.verdict == l.verdict);
  }
}
