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

#include "dialg/canonical.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace dialg {
namespace {

// Normal forms are first computed with binders named by scope depth
// (`@L`), which makes sibling renderings comparable independently of their
// position. Final names `#k` are assigned afterwards in print order.
struct Canon {
  Term term;
  std::string key;
};

Name level_name(std::size_t level) { return "@" + std::to_string(level); }

class Canonicalizer {
 public:
  Canon process(const Term& t, std::size_t level) {
    std::vector<Name> binders;
    std::vector<Term> atoms;
    flatten(t, binders, atoms);

    std::vector<NameSet> atom_free;
    NameSet used;
    for (const auto& a : atoms) {
      atom_free.push_back(free_names(a));
      used.insert(atom_free.back().begin(), atom_free.back().end());
    }
    std::erase_if(binders, [&](const Name& b) { return !used.count(b); });

    if (binders.empty()) {
      std::vector<Canon> cs;
      for (const auto& a : atoms) cs.push_back(atom(a, level));
      return assemble({}, std::move(cs));
    }

    const std::size_t k = binders.size();
    std::vector<std::string> erased_keys;
    for (const auto& a : atoms) {
      Term e = a;
      for (const auto& b : binders) e = substitute(e, "$", b);
      erased_keys.push_back(atom(e, level + k).key);
    }
    std::vector<std::vector<std::string>> signature(k);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atom_free[i].count(binders[b])) signature[b].push_back(erased_keys[i]);
      std::sort(signature[b].begin(), signature[b].end());
    }
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return signature[x] < signature[y]; });

    // Binders with equal signatures may be permuted freely; keep the least
    // rendering over those permutations.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < k;) {
      std::size_t j = i + 1;
      while (j < k && signature[order[j]] == signature[order[i]]) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    for (auto [lo, hi] : groups) std::sort(order.begin() + lo, order.begin() + hi);

    std::vector<Name> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(level_name(level + i));

    std::optional<Canon> best;
    while (true) {
      std::vector<Canon> cs;
      for (const auto& a : atoms) {
        Term named = a;
        for (std::size_t pos = 0; pos < k; ++pos) named = substitute(named, names[pos], binders[order[pos]]);
        cs.push_back(atom(named, level + k));
      }
      Canon c = assemble(names, std::move(cs));
      if (!best || c.key < best->key) best = std::move(c);

      std::size_t g = groups.size();
      bool advanced = false;
      while (g > 0) {
        --g;
        auto [lo, hi] = groups[g];
        if (std::next_permutation(order.begin() + lo, order.begin() + hi)) {
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    return std::move(*best);
  }

 private:
  void flatten(const Term& t, std::vector<Name>& binders, std::vector<Term>& atoms) {
    switch (t.kind()) {
      case Term::Kind::Sum:
        if (!t.is_nil()) atoms.push_back(t);
        return;
      case Term::Kind::Par:
        for (const auto& c : t.components()) flatten(c, binders, atoms);
        return;
      case Term::Kind::Nu: {
        Name fresh = "%" + std::to_string(counter_++);
        binders.push_back(fresh);
        flatten(substitute(t.body(), fresh, t.binder()), binders, atoms);
        return;
      }
    }
  }

  Canon atom(const Term& sum, std::size_t level) {
    std::string cache_key = std::to_string(level) + "|" + pretty(sum);
    if (auto it = cache_.find(cache_key); it != cache_.end()) return it->second;

    std::vector<std::pair<std::string, Summand>> keyed;
    for (const auto& s : sum.summands()) {
      Summand out;
      if (s.prefix.kind == Prefix::Kind::PiIn) {
        Name x = level_name(level);
        out.prefix = Prefix::pi_in(s.prefix.channel, x);
        out.continuation = process(substitute(s.continuation, x, s.prefix.object), level + 1).term;
      } else {
        out.prefix = s.prefix;
        out.continuation = process(s.continuation, level).term;
      }
      std::string key = pretty(Term::sum({out}));
      keyed.emplace_back(std::move(key), std::move(out));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Summand> summands;
    for (auto& [key, s] : keyed) summands.push_back(std::move(s));
    Term t = Term::sum(std::move(summands));
    Canon c{t, pretty(t)};
    cache_.emplace(std::move(cache_key), c);
    return c;
  }

  static Canon assemble(const std::vector<Name>& binders, std::vector<Canon> atoms) {
    std::sort(atoms.begin(), atoms.end(), [](const Canon& a, const Canon& b) { return a.key < b.key; });
    std::vector<Term> parts;
    for (auto& a : atoms) parts.push_back(std::move(a.term));
    Term t = Term::restrict(binders, std::move(parts));
    std::string key = pretty(t);
    return {std::move(t), std::move(key)};
  }

  std::size_t counter_ = 0;
  std::unordered_map<std::string, Canon> cache_;
};

class Renumber {
 public:
  explicit Renumber(const NameSet& free) : free_(free) {}

  Term run(const Term& t, std::map<Name, Name>& env) {
    switch (t.kind()) {
      case Term::Kind::Sum: {
        std::vector<Summand> out;
        for (const auto& s : t.summands()) {
          Prefix p = s.prefix;
          p.channel = lookup(env, p.channel);
          if (p.kind == Prefix::Kind::PiOut) p.object = lookup(env, p.object);
          if (p.kind == Prefix::Kind::PiIn) {
            Name fresh = next();
            auto saved = bind(env, p.object, fresh);
            Name old = p.object;
            p.object = fresh;
            out.push_back(Summand{p, run(s.continuation, env)});
            unbind(env, old, saved);
          } else {
            out.push_back(Summand{p, run(s.continuation, env)});
          }
        }
        return Term::sum(std::move(out));
      }
      case Term::Kind::Par: {
        std::vector<Term> out;
        for (const auto& c : t.components()) out.push_back(run(c, env));
        return Term::par(std::move(out));
      }
      case Term::Kind::Nu: {
        Name fresh = next();
        auto saved = bind(env, t.binder(), fresh);
        Term body = run(t.body(), env);
        unbind(env, t.binder(), saved);
        return Term::nu(fresh, std::move(body));
      }
    }
    return t;
  }

 private:
  static Name lookup(const std::map<Name, Name>& env, const Name& n) {
    auto it = env.find(n);
    return it == env.end() ? n : it->second;
  }
  static std::optional<Name> bind(std::map<Name, Name>& env, const Name& from, const Name& to) {
    std::optional<Name> saved;
    if (auto it = env.find(from); it != env.end()) saved = it->second;
    env[from] = to;
    return saved;
  }
  static void unbind(std::map<Name, Name>& env, const Name& from, const std::optional<Name>& saved) {
    if (saved) env[from] = *saved;
    else env.erase(from);
  }
  Name next() {
    while (true) {
      Name n = "#" + std::to_string(counter_++);
      if (!free_.count(n)) return n;
    }
  }

  const NameSet& free_;
  std::size_t counter_ = 0;
};

}  // namespace

CanonicalTerm canonicalize(const Term& t) {
  Canonicalizer c;
  Canon nf = c.process(t, 0);
  NameSet free = free_names(t);
  std::map<Name, Name> env;
  Term named = Renumber(free).run(nf.term, env);
  std::string rendering = pretty(named);
  return CanonicalTerm(std::move(named), std::move(rendering));
}

bool congruent(const Term& p, const Term& q) {
  auto cp = calculus_of(p);
  auto cq = calculus_of(q);
  if (cp && cq && *cp != *cq) throw CalculusMismatch("cannot compare a CCS term with a pi term");
  return canonicalize(p) == canonicalize(q);
}

Spine strip_spine(const Term& t) {
  Spine s;
  const Term* cur = &t;
  while (cur->kind() == Term::Kind::Nu) {
    s.restricted.push_back(cur->binder());
    cur = &cur->body();
  }
  if (cur->kind() == Term::Kind::Par) s.components = cur->components();
  else if (!cur->is_nil()) s.components.push_back(*cur);
  return s;
}

}  // namespace dialg
