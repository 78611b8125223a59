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
#include "dialg/pi.hpp"

using namespace dialg;

namespace {

CanonicalTerm p(const char* s) { return canonicalize(parse_term(s, Calculus::Pi, true)); }

std::set<std::string> renderings(const std::set<CanonicalTerm>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.rendering());
  return out;
}

std::set<std::pair<std::string, std::string>> labelled(const std::set<PiTransition>& ts) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [l, t] : ts) out.emplace(l.to_string(), t.rendering());
  return out;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(PiLabel::tau().to_string() == "tau");
  CHECK(PiLabel::free_in("a", "b").to_string() == "a b");
  CHECK(PiLabel::free_out("a", "b").to_string() == "~a b");
  CHECK(PiLabel::bound_out("a", "#0").to_string() == "~a(#0)");
}

TEST_CASE("pool") {
  NamePool pool({"b", "a", "a"});
  CHECK(pool.names() == std::vector<Name>{"a", "b"});
  CHECK(pool.contains("a"));
  CHECK_FALSE(pool.contains("c"));
  NamePool sys = NamePool::for_pi_system({parse_term("nu x. a<x>.b(y).0", Calculus::Pi)});
  CHECK(sys.names() == std::vector<Name>{"#0", "#1", "#2", "#3", "a", "b"});
  NamePool ccs = NamePool::for_ccs_system({parse_term("a.0 | ~b.0", Calculus::Ccs)});
  CHECK(ccs.names() == std::vector<Name>{"#0", "a", "b"});
}

TEST_CASE("pi_dialg_unary") {
  CHECK(renderings(pi_dialg_unary(p("tau.a<b>.0 + c(y).0"))) == std::set<std::string>{"a<b>.0"});
  CHECK(pi_dialg_unary(p("a(y).0")).empty());
  CHECK(renderings(pi_dialg_unary(p("a<b>.0 | a(y).y<y>.0"))) == std::set<std::string>{"b<b>.0"});
  // Internal communication of a private name keeps it private.
  CHECK(renderings(pi_dialg_unary(p("nu b. nu x. (b<x>.0 | b(y).y<c>.0)"))) ==
        std::set<std::string>{"nu #0. #0<c>.0"});
}

TEST_CASE("pi_dialg_binary") {
  CHECK(renderings(pi_dialg_binary(p("a<b>.c<a>.0 + c(z).0"), p("a(y).y<y>.0 + b<a>.0"))) ==
        std::set<std::string>{"b<b>.0 | c<a>.0"});
  // Scope extrusion: the restriction grows over the receiver.
  CHECK(renderings(pi_dialg_binary(p("nu x. a<x>.x(z).0"), p("a(y).y<b>.0"))) ==
        std::set<std::string>{"nu #0. #0(#1).0 | #0<b>.0"});
  CHECK(pi_dialg_binary(p("0"), p("a(y).0")).empty());
  CHECK(pi_dialg_binary(p("a<b>.0"), p("a<b>.0")).empty());
  // A private channel cannot be reached from outside.
  CHECK(pi_dialg_binary(p("nu a. a<b>.0"), p("a(y).0")).empty());
}

TEST_CASE("early_step") {
  NamePool ab({"a", "b", "#0"});
  CHECK(labelled(early_step(p("a(y).y<y>.0"), ab)) ==
        std::set<std::pair<std::string, std::string>>{
            {"a #0", "#0<#0>.0"}, {"a a", "a<a>.0"}, {"a b", "b<b>.0"}});
  CHECK(labelled(early_step(p("nu x. a<x>.x<b>.0"), ab)) ==
        std::set<std::pair<std::string, std::string>>{{"~a(#0)", "#0<b>.0"}});
  CHECK(early_step(p("0"), ab).empty());
  // Close: the bound output meets an input.
  auto close = early_step(p("nu x. a<x>.x<b>.0 | a(y).y(z).0"), NamePool({"a", "b", "#0"}));
  CHECK(close.count({PiLabel::tau(), p("nu x. x<b>.0 | x(z).0")}));
  CHECK_THROWS_AS(early_step(p("a<c>.0"), ab), PoolTooSmall);
  CHECK_THROWS_AS(early_step(p("nu x. a<x>.0"), NamePool({"a"})), PoolTooSmall);
}

TEST_CASE("barbs") {
  CHECK(barbs(p("a<b>.0 | c(y).0")) == std::set<Barb>{{"a", Polarity::Out}, {"c", Polarity::In}});
  CHECK(barbs(p("nu a. a<b>.0")).empty());
  CHECK(barbs(p("tau.a(y).0")).empty());
  CHECK(barbs(p("b<c>.0 + b(y).0")) == std::set<Barb>{{"b", Polarity::In}, {"b", Polarity::Out}});
}

TEST_CASE("barbed_bisim") {
  auto check = [](const char* l, const char* r) {
    DialgebraTable t = explore({p(l), p(r)}, Semantics::PiDialg, BoundedClosure{1, std::nullopt});
    return barbed_bisim(t).same_block(0, 1);
  };
  CHECK_FALSE(check("tau.a<b>.0", "a<b>.0"));
  CHECK(check("tau.a<b>.0", "tau.a<c>.0"));
  CHECK(check("a<b>.0 | a(y).0", "a(y).0 + a<b>.0 + tau.0"));
}

TEST_CASE("property: tau transitions are unary reactions") {
  for (const auto& t : gen_corpus(51, 150, 8, Calculus::Pi)) {
    CanonicalTerm c = canonicalize(t);
    NamePool pool = NamePool::for_pi_system({t});
    std::set<CanonicalTerm> taus;
    for (const auto& [l, z] : early_step(c, pool))
      if (l.kind == PiLabel::Kind::Tau) taus.insert(z);
    CAPTURE(c.rendering());
    CHECK(taus == pi_dialg_unary(c));
  }
}

TEST_CASE("property: free outputs and inputs match witness reactions") {
  for (const auto& t : gen_corpus(53, 120, 8, Calculus::Pi)) {
    CanonicalTerm c = canonicalize(t);
    NamePool pool = NamePool::for_pi_system({t});
    auto steps = early_step(c, pool);
    for (const auto& a : pool.names()) {
      for (const auto& b : pool.names()) {
        std::set<CanonicalTerm> in;
        for (const auto& [l, z] : steps)
          if (l == PiLabel::free_in(a, b)) in.insert(z);
        Term w = Term::prefixed(Prefix::pi_out(a, b), Term::nil());
        CHECK(in == pi_dialg_binary(c, canonicalize(w)));
      }
    }
  }
}

TEST_CASE("property: symmetry of binary reactions") {
  auto terms = gen_corpus(57, 80, 6, Calculus::Pi);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    CanonicalTerm x = canonicalize(terms[i]);
    CanonicalTerm y = canonicalize(terms[i + 1]);
    CHECK(pi_dialg_binary(x, y) == pi_dialg_binary(y, x));
  }
}
