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

#include "dialg/ccs.hpp"
#include "dialg/corpus.hpp"

using namespace dialg;

namespace {

CanonicalTerm c(const char* s) { return canonicalize(parse_term(s, Calculus::Ccs)); }

std::set<std::string> renderings(const std::set<CanonicalTerm>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.rendering());
  return out;
}

std::set<CanonicalTerm> successors(const CanonicalTerm& p, const CcsLabel& l) {
  std::set<CanonicalTerm> out;
  for (const auto& [m, q] : lts_step(p))
    if (m == l) out.insert(q);
  return out;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(CcsLabel::parse("tau") == CcsLabel::tau());
  CHECK(CcsLabel::parse("a") == CcsLabel::in("a"));
  CHECK(CcsLabel::parse("~a") == CcsLabel::out("a"));
  CHECK(CcsLabel::out("b").to_string() == "~b");
  CHECK(CcsLabel::in("a").complements(CcsLabel::out("a")));
  CHECK_FALSE(CcsLabel::in("a").complements(CcsLabel::in("a")));
  CHECK_FALSE(CcsLabel::tau().complements(CcsLabel::tau()));
}

TEST_CASE("lts_step") {
  std::set<CcsTransition> pre = lts_step(c("a.b.0 + ~c.0"));
  CHECK(pre == std::set<CcsTransition>{{CcsLabel::in("a"), c("b.0")}, {CcsLabel::out("c"), c("0")}});
  CHECK(lts_step(c("0")).empty());
  std::set<CcsTransition> redex = lts_step(c("a.0 | ~a.0"));
  CHECK(redex == std::set<CcsTransition>{
                     {CcsLabel::in("a"), c("~a.0")}, {CcsLabel::out("a"), c("a.0")}, {CcsLabel::tau(), c("0")}});
  // Restricted channels are not observable, their synchronisation is.
  CHECK(lts_step(c("nu a. (a.0 | ~a.b.0)")) == std::set<CcsTransition>{{CcsLabel::tau(), c("b.0")}});
}

TEST_CASE("dialg_unary") {
  CHECK(renderings(dialg_unary(c("tau.a.0 + b.0"))) == std::set<std::string>{"a.0"});
  CHECK(dialg_unary(c("a.0")).empty());
  CHECK(renderings(dialg_unary(c("a.0 | ~a.c.0"))) == std::set<std::string>{"c.0"});
  CHECK(renderings(dialg_unary(c("a.0 | ~a.0 | ~a.0"))) == std::set<std::string>{"~a.0"});
  CHECK(renderings(dialg_unary(c("tau.0 | nu a. (a.0 | ~a.0)"))) == std::set<std::string>{"nu #0. #0.0 | ~#0.0", "tau.0"});
}

TEST_CASE("dialg_binary") {
  CHECK(renderings(dialg_binary(c("~a.b.0 + c.0"), c("a.~c.0 + b.0"))) == std::set<std::string>{"b.0 | ~c.0"});
  CHECK(dialg_binary(c("0"), c("0")).empty());
  CHECK(dialg_binary(c("a.0"), c("a.0")).empty());
  // Scope of a restricted name is preserved across the interaction.
  CHECK(renderings(dialg_binary(c("nu a. (~a.0 | c.0)"), c("a.b.0"))).empty());
  CHECK(renderings(dialg_binary(c("nu a. (~a.0 | c.0)"), c("~c.b.0"))) == std::set<std::string>{"nu #0. b.0 | ~#0.0"});
  // Bound names on either side are kept apart.
  CHECK(renderings(dialg_binary(c("nu a. (~a.0 | c.a.0)"), c("nu a. ~c.a.0"))) ==
        std::set<std::string>{"nu #0. nu #1. #0.0 | #1.0 | ~#1.0"});
}

TEST_CASE("property: symmetry and congruence invariance") {
  auto terms = gen_corpus(31, 60, 8, Calculus::Ccs);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    CanonicalTerm p = canonicalize(terms[i]);
    CanonicalTerm q = canonicalize(terms[i + 1]);
    CHECK(dialg_binary(p, q) == dialg_binary(q, p));
    CHECK(dialg_binary(canonicalize(Term::par({terms[i], Term::nil()})), q) == dialg_binary(p, q));
  }
}

TEST_CASE("property: transitions match reactions") {
  for (const auto& t : gen_corpus(41, 200, 10, Calculus::Ccs)) {
    CanonicalTerm p = canonicalize(t);
    CAPTURE(p.rendering());
    CHECK(successors(p, CcsLabel::tau()) == dialg_unary(p));
    for (const char* a : {"a", "b", "c", "d"}) {
      CHECK(successors(p, CcsLabel::in(a)) == dialg_binary(p, c((std::string("~") + a + ".0").c_str())));
      CHECK(successors(p, CcsLabel::out(a)) == dialg_binary(p, c((std::string(a) + ".0").c_str())));
    }
  }
}

TEST_CASE("property: unary reactions consume prefixes") {
  for (const auto& t : gen_corpus(43, 200, 10, Calculus::Ccs)) {
    CanonicalTerm p = canonicalize(t);
    for (const auto& z : dialg_unary(p)) CHECK(prefix_count(z.term()) < prefix_count(p.term()));
  }
}
