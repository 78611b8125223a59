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

#include <random>

#include "dialg/canonical.hpp"
#include "dialg/corpus.hpp"
#include "dialg/engine.hpp"
#include "mutate.hpp"

using namespace dialg;

namespace {

std::vector<std::string> pretty_all(const std::vector<Term>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(pretty(t));
  return out;
}

}  // namespace

TEST_CASE("fixed seeds") {
  CHECK(pretty_all(gen_corpus(1, 5, 6, Calculus::Ccs)) ==
        std::vector<std::string>{"a.0", "~c.0 + ~c.0 + tau.0", "nu a. ~a.0 + ~a.tau.0 + b.a.0", "0", "~b.0"});
  CHECK(pretty_all(gen_corpus(1, 5, 6, Calculus::Pi)) ==
        std::vector<std::string>{"a(v0).0", "c<c>.0 + c<a>.0 + a<c>.0", "c<a>.0 + b<c>.0", "c<a>.0 + a(v0).0", "0"});
}

TEST_CASE("determinism") {
  for (Calculus c : {Calculus::Ccs, Calculus::Pi}) {
    CHECK(gen_corpus(9, 100, 12, c) == gen_corpus(9, 100, 12, c));
    CHECK(gen_corpus(9, 100, 12, c) != gen_corpus(10, 100, 12, c));
  }
}

TEST_CASE("size bound 1") {
  for (Calculus c : {Calculus::Ccs, Calculus::Pi}) {
    for (const auto& t : gen_corpus(3, 200, 1, c)) {
      REQUIRE(t.kind() == Term::Kind::Sum);
      CHECK(t.summands().size() <= 1);
      for (const auto& s : t.summands()) CHECK(s.continuation.is_nil());
    }
  }
}

TEST_CASE("bounds, calculus and channels") {
  for (Calculus c : {Calculus::Ccs, Calculus::Pi}) {
    for (const auto& t : gen_corpus(4, 500, 12, c, {"x", "y"})) {
      CHECK(term_size(t) <= 12);
      auto calc = calculus_of(t);
      if (calc) CHECK(*calc == c);
      for (const auto& n : free_names(t)) CHECK((n == "x" || n == "y"));
    }
  }
}

TEST_CASE("corpus explores under the default budget") {
  for (const auto& t : gen_corpus(5, 500, 12, Calculus::Ccs)) {
    auto r = bisimilar(t, t, Mode::CcsDialg);
    CHECK(r.verdict == Verdict::Bisimilar);
  }
}

TEST_CASE("congruence steps preserve the canonical form") {
  std::mt19937_64 rng(7);
  for (const auto& t : gen_corpus(6, 300, 10, Calculus::Pi)) {
    Term u = testing::congruence_step(t, rng);
    CHECK(congruent(t, u));
  }
}

TEST_CASE("expansion") {
  Term par = parse_term("a.0 | ~b.0", Calculus::Ccs);
  CHECK(congruent(testing::expand(par), parse_term("a.~b.0 + ~b.a.0", Calculus::Ccs)));
  Term prefixed = parse_term("a.0", Calculus::Ccs);
  CHECK(testing::expand(prefixed) == prefixed);
  Term comm = parse_term("a<b>.0 | a(y).y<y>.0", Calculus::Pi);
  CHECK(bisimilar(comm, testing::expand(comm), Mode::PiEarly).verdict == Verdict::Bisimilar);
}

TEST_CASE("related pairs") {
  auto pairs = testing::related_pairs(2, 60, 8, Calculus::Ccs);
  CHECK(pairs.size() == 60);
  for (const auto& p : pairs) {
    if (p.kind == "congruent") CHECK(congruent(p.left, p.right));
    if (p.kind == "expansion") CHECK(term_size(p.right) <= 8);
  }
  CHECK(testing::extrusion_pairs().size() >= 5);
}
