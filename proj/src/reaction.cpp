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

#include "reaction.hpp"

#include <optional>

namespace dialg::detail {
namespace {

// (syn) / (com) on one summand from each side, returning the two
// continuations to be placed in parallel.
std::optional<std::pair<Term, Term>> synchronise(const Summand& s, const Summand& u, SyncRule rule) {
  const Prefix& a = s.prefix;
  const Prefix& b = u.prefix;
  if (a.is_tau() || b.is_tau() || a.channel != b.channel) return std::nullopt;
  if (rule == SyncRule::Syn) {
    bool ok = (a.kind == Prefix::Kind::CcsOut && b.kind == Prefix::Kind::CcsIn) ||
              (a.kind == Prefix::Kind::CcsIn && b.kind == Prefix::Kind::CcsOut);
    if (!ok) return std::nullopt;
    return std::pair{s.continuation, u.continuation};
  }
  if (a.kind == Prefix::Kind::PiOut && b.kind == Prefix::Kind::PiIn)
    return std::pair{s.continuation, substitute(u.continuation, a.object, b.object)};
  if (a.kind == Prefix::Kind::PiIn && b.kind == Prefix::Kind::PiOut)
    return std::pair{substitute(s.continuation, b.object, a.object), u.continuation};
  return std::nullopt;
}

std::vector<Term> without(const std::vector<Term>& v, std::size_t i) {
  std::vector<Term> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i) out.push_back(v[k]);
  return out;
}

}  // namespace

void require_calculus(const Term& t, Calculus c, const char* op) {
  auto seen = calculus_of(t);
  if (seen && *seen != c)
    throw CalculusMismatch(std::string(op) + " expects a " + to_string(c) + " term");
}

Ports ports(const Term& t) {
  Spine sp = strip_spine(t);
  NameSet hidden(sp.restricted.begin(), sp.restricted.end());
  Ports ps;
  for (const auto& c : sp.components)
    for (const auto& s : c.summands()) {
      if (s.prefix.is_tau() || hidden.count(s.prefix.channel)) continue;
      (s.prefix.is_input() ? ps.in : ps.out).insert(s.prefix.channel);
    }
  return ps;
}

namespace {

bool meets(const std::set<Name>& a, const std::set<Name>& b) {
  for (const auto& n : a)
    if (b.count(n)) return true;
  return false;
}

}  // namespace

bool may_react(const Ports& p, const Ports& q) { return meets(p.in, q.out) || meets(p.out, q.in); }

std::set<CanonicalTerm> react_binary(const CanonicalTerm& p, const CanonicalTerm& q, SyncRule rule) {
  if (!may_react(ports(p.term()), ports(q.term()))) return {};
  // (hid): alpha-convert so that neither side's restricted names are known
  // to the other, then strip both restriction spines.
  Term left = refresh_bound(p.term(), all_names(q.term()));
  Term right = refresh_bound(q.term(), all_names(left));
  Spine sl = strip_spine(left);
  Spine sr = strip_spine(right);

  std::vector<Name> binders = sl.restricted;
  binders.insert(binders.end(), sr.restricted.begin(), sr.restricted.end());

  std::set<CanonicalTerm> out;
  // (par2)/(sym) select one component on each side; (syn)/(com) matches
  // one summand of each.
  for (std::size_t i = 0; i < sl.components.size(); ++i) {
    for (std::size_t j = 0; j < sr.components.size(); ++j) {
      for (const auto& s : sl.components[i].summands()) {
        for (const auto& u : sr.components[j].summands()) {
          auto cont = synchronise(s, u, rule);
          if (!cont) continue;
          std::vector<Term> parts = without(sl.components, i);
          for (auto& t : without(sr.components, j)) parts.push_back(std::move(t));
          parts.push_back(std::move(cont->first));
          parts.push_back(std::move(cont->second));
          out.insert(canonicalize(Term::restrict(binders, std::move(parts))));
        }
      }
    }
  }
  return out;
}

std::set<CanonicalTerm> react_unary(const CanonicalTerm& p, SyncRule rule) {
  Spine sp = strip_spine(p.term());
  const auto& cs = sp.components;
  std::set<CanonicalTerm> out;

  // (tau) under (par1) and (res).
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (const auto& s : cs[i].summands()) {
      if (!s.prefix.is_tau()) continue;
      std::vector<Term> parts = cs;
      parts[i] = s.continuation;
      out.insert(canonicalize(Term::restrict(sp.restricted, std::move(parts))));
    }
  }

  // (int) under (res): every split of the components into two non-empty
  // groups may interact. Component 0 stays on the left; (sym) covers the
  // mirrored split.
  const std::size_t n = cs.size();
  if (n < 2) return out;
  if (n > 20) throw Error("too many parallel components to enumerate interactions");
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 1; mask < full; mask += 2) {
    std::vector<Term> l, r;
    for (std::size_t k = 0; k < n; ++k) ((mask >> k) & 1 ? l : r).push_back(cs[k]);
    auto results = react_binary(canonicalize(Term::par(std::move(l))), canonicalize(Term::par(std::move(r))), rule);
    for (const auto& z : results) out.insert(canonicalize(Term::restrict(sp.restricted, {z.term()})));
  }
  return out;
}

}  // namespace dialg::detail
