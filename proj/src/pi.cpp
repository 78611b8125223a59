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

#include "dialg/pi.hpp"

#include <algorithm>
#include <map>

#include "reaction.hpp"

namespace dialg {

NamePool::NamePool(std::vector<Name> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

bool NamePool::contains(const Name& n) const {
  return std::binary_search(names_.begin(), names_.end(), n);
}

namespace {

NamePool pool_with_fresh(const std::vector<Term>& system, std::size_t extra) {
  NameSet names;
  for (const auto& t : system) {
    auto fn = free_names(t);
    names.insert(fn.begin(), fn.end());
  }
  NameSet used = names;
  for (std::size_t i = 0; i < extra; ++i) {
    Name z = fresh_name(used);
    used.insert(z);
    names.insert(z);
  }
  return NamePool(std::vector<Name>(names.begin(), names.end()));
}

}  // namespace

NamePool NamePool::for_pi_system(const std::vector<Term>& system) {
  std::size_t m = 0;
  for (const auto& t : system) m += binder_count(t);
  return pool_with_fresh(system, m + 2);
}

NamePool NamePool::for_ccs_system(const std::vector<Term>& system) {
  return pool_with_fresh(system, 1);
}

std::string PiLabel::to_string() const {
  switch (kind) {
    case Kind::Tau: return "tau";
    case Kind::FreeIn: return channel + " " + datum;
    case Kind::FreeOut: return "~" + channel + " " + datum;
    case Kind::BoundOut: return "~" + channel + "(" + datum + ")";
  }
  return {};
}

std::set<CanonicalTerm> pi_dialg_unary(const CanonicalTerm& p) {
  detail::require_calculus(p.term(), Calculus::Pi, "pi_dialg_unary");
  return detail::react_unary(p, detail::SyncRule::Com);
}

std::set<CanonicalTerm> pi_dialg_binary(const CanonicalTerm& p, const CanonicalTerm& q) {
  detail::require_calculus(p.term(), Calculus::Pi, "pi_dialg_binary");
  detail::require_calculus(q.term(), Calculus::Pi, "pi_dialg_binary");
  return detail::react_binary(p, q, detail::SyncRule::Com);
}

namespace {

// Inputs stay abstract (`var` free in the residual) until the root, where
// they are instantiated with every pool name; communication substitutes
// the sender's datum directly.
struct RawStep {
  enum class Kind { Tau, Out, BoundOut, In } kind;
  Name channel;
  Name datum;  // Out: the datum, In: the abstracted variable
  Term residual;
};

// Early SOS. Binders have been renamed away from the pool, so the single
// bound-output name `fresh` never clashes with a binder or a free name.
struct EarlySos {
  Name fresh;

  std::vector<RawStep> steps(const Term& t) const {
    using K = RawStep::Kind;
    std::vector<RawStep> out;
    switch (t.kind()) {
      case Term::Kind::Sum:
        for (const auto& s : t.summands()) {
          const Prefix& pre = s.prefix;
          switch (pre.kind) {
            case Prefix::Kind::Tau:
              out.push_back({K::Tau, {}, {}, s.continuation});
              break;
            case Prefix::Kind::PiOut:
              out.push_back({K::Out, pre.channel, pre.object, s.continuation});
              break;
            case Prefix::Kind::PiIn:
              out.push_back({K::In, pre.channel, pre.object, s.continuation});
              break;
            default:
              throw CalculusMismatch("early_step expects a pi term");
          }
        }
        break;
      case Term::Kind::Nu: {
        const Name& x = t.binder();
        for (auto& st : steps(t.body())) {
          if (st.kind != K::Tau && st.channel == x) continue;
          if (st.kind == K::Out && st.datum == x) {
            // (open)
            out.push_back({K::BoundOut, st.channel, fresh, substitute(st.residual, fresh, x)});
            continue;
          }
          st.residual = Term::nu(x, std::move(st.residual));
          out.push_back(std::move(st));
        }
        break;
      }
      case Term::Kind::Par: {
        const auto& cs = t.components();
        std::vector<std::vector<RawStep>> local;
        for (const auto& c : cs) local.push_back(steps(c));
        for (std::size_t i = 0; i < cs.size(); ++i) {
          for (const auto& st : local[i]) {
            std::vector<Term> parts = cs;
            parts[i] = st.residual;
            out.push_back({st.kind, st.channel, st.datum, Term::par(std::move(parts))});
          }
        }
        // (comm) and (close), in both orientations.
        for (std::size_t i = 0; i < cs.size(); ++i) {
          for (std::size_t j = 0; j < cs.size(); ++j) {
            if (i == j) continue;
            for (const auto& so : local[i]) {
              if (so.kind != K::Out && so.kind != K::BoundOut) continue;
              for (const auto& si : local[j]) {
                if (si.kind != K::In || si.channel != so.channel) continue;
                std::vector<Term> parts = cs;
                parts[i] = so.residual;
                parts[j] = substitute(si.residual, so.datum, si.datum);
                Term body = Term::par(std::move(parts));
                if (so.kind == K::BoundOut) body = Term::nu(so.datum, std::move(body));
                out.push_back({K::Tau, {}, {}, std::move(body)});
              }
            }
          }
        }
        break;
      }
    }
    return out;
  }
};

}  // namespace

std::set<PiTransition> early_step(const CanonicalTerm& p, const NamePool& pool) {
  detail::require_calculus(p.term(), Calculus::Pi, "early_step");
  NameSet fn = free_names(p.term());
  for (const auto& n : fn)
    if (!pool.contains(n)) throw PoolTooSmall("name pool misses free name " + n);
  Name fresh = fresh_name(fn);
  if (!pool.contains(fresh)) throw PoolTooSmall("name pool cannot supply fresh name " + fresh);
  NameSet avoid(pool.names().begin(), pool.names().end());
  Term root = refresh_bound(p.term(), avoid);
  EarlySos sos{fresh};
  std::set<PiTransition> out;
  for (auto& st : sos.steps(root)) {
    switch (st.kind) {
      case RawStep::Kind::Tau:
        out.emplace(PiLabel::tau(), canonicalize(st.residual));
        break;
      case RawStep::Kind::Out:
        out.emplace(PiLabel::free_out(st.channel, st.datum), canonicalize(st.residual));
        break;
      case RawStep::Kind::BoundOut:
        out.emplace(PiLabel::bound_out(st.channel, st.datum), canonicalize(st.residual));
        break;
      case RawStep::Kind::In:
        for (const auto& b : pool.names())
          out.emplace(PiLabel::free_in(st.channel, b), canonicalize(substitute(st.residual, b, st.datum)));
        break;
    }
  }
  return out;
}

std::set<Barb> barbs(const CanonicalTerm& p) {
  detail::require_calculus(p.term(), Calculus::Pi, "barbs");
  Spine sp = strip_spine(p.term());
  NameSet hidden(sp.restricted.begin(), sp.restricted.end());
  std::set<Barb> out;
  for (const auto& c : sp.components) {
    for (const auto& s : c.summands()) {
      const Prefix& pre = s.prefix;
      if (pre.is_tau() || hidden.count(pre.channel)) continue;
      out.emplace(pre.channel, pre.is_input() ? Polarity::In : Polarity::Out);
    }
  }
  return out;
}

Partition barbed_bisim(const DialgebraTable& table) {
  const std::size_t n = table.size();
  std::vector<std::size_t> key(n);
  {
    std::map<std::set<Barb>, std::size_t> ids;
    for (StateId s = 0; s < n; ++s) key[s] = ids.emplace(barbs(table.space[s]), ids.size()).first->second;
  }
  Partition part = Partition::from_keys(key);
  while (true) {
    std::map<std::pair<std::size_t, std::set<std::size_t>>, std::size_t> ids;
    for (StateId s = 0; s < n; ++s) {
      std::set<std::size_t> succ;
      auto it = table.unary.find(s);
      if (it != table.unary.end())
        for (StateId t : it->second) succ.insert(part.block_of(t));
      key[s] = ids.emplace(std::make_pair(part.block_of(s), std::move(succ)), ids.size()).first->second;
    }
    Partition next = Partition::from_keys(key);
    if (next.num_blocks() == part.num_blocks()) return next;
    part = std::move(next);
  }
}

}  // namespace dialg
