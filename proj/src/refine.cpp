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
#include <limits>
#include <map>

#include "dialg/engine.hpp"

namespace dialg {

namespace {

using Key = std::vector<std::size_t>;
constexpr std::size_t kSep = std::numeric_limits<std::size_t>::max();

std::set<std::size_t> image(const StateSet& s, const Partition& p) {
  std::set<std::size_t> out;
  for (StateId t : s) out.insert(p.block_of(t));
  return out;
}

void push_set(Key& key, const std::set<std::size_t>& s) {
  key.push_back(s.size());
  key.insert(key.end(), s.begin(), s.end());
}

Partition from_signatures(const std::vector<Key>& sig) {
  std::map<Key, std::size_t> ids;
  std::vector<std::size_t> key(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s) key[s] = ids.emplace(sig[s], ids.size()).first->second;
  return Partition::from_keys(key);
}

}  // namespace

Partition refine_dialgebra(const DialgebraTable& table, std::size_t* rounds) {
  const std::size_t n = table.size();
  // A universal partner meets every state that takes part in any binary
  // experiment, on both sides. Comparing rows and columns at universal
  // partners covers every recorded experiment whenever two universal
  // partners do not share a block; when they do, their complete rows and
  // columns must agree as well.
  std::vector<bool> active(n, false);
  std::vector<std::size_t> as_left(n, 0), as_right(n, 0);
  for (const auto& [e, rs] : table.binary) {
    active[e.first] = active[e.second] = true;
    ++as_left[e.first];
    ++as_right[e.second];
  }
  const std::size_t n_active = static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
  std::vector<bool> universal(n, false);
  std::vector<StateId> partners;
  for (StateId y = 0; y < n; ++y) {
    universal[y] = n_active > 0 && as_left[y] == n_active && as_right[y] == n_active;
    if (universal[y]) partners.push_back(y);
  }
  auto push_result = [&](Key& k, StateId l, StateId r, const Partition& part) {
    const StateSet* rs = table.results(Experiment::binary(l, r));
    if (!rs) k.push_back(kSep);
    else push_set(k, image(*rs, part));
  };

  // Blocks holding several universal partners: partners are separated by
  // their complete rows and columns, other members follow the least partner.
  auto split_partners = [&](const Partition& part) {
    std::vector<std::vector<StateId>> partners_in(part.num_blocks());
    for (StateId y : partners) partners_in[part.block_of(y)].push_back(y);
    std::vector<Key> sig(n);
    std::map<StateId, Key> full;
    for (StateId x = 0; x < n; ++x) {
      sig[x].push_back(part.block_of(x));
      const auto& in_block = partners_in[part.block_of(x)];
      if (in_block.size() < 2) continue;
      StateId ref = universal[x] ? x : in_block.front();
      auto it = full.find(ref);
      if (it == full.end()) {
        Key k;
        for (StateId y = 0; y < n; ++y) {
          if (!active[y]) continue;
          push_result(k, ref, y, part);
          push_result(k, y, ref, part);
        }
        it = full.emplace(ref, std::move(k)).first;
      }
      sig[x].insert(sig[x].end(), it->second.begin(), it->second.end());
    }
    return from_signatures(sig);
  };

  // Results at universal partners, looked up once.
  std::vector<const StateSet*> unary(n, nullptr);
  std::vector<std::vector<const StateSet*>> rows(n), cols(n);
  for (StateId x = 0; x < n; ++x) {
    if (auto u = table.unary.find(x); u != table.unary.end()) unary[x] = &u->second;
    for (StateId y : partners) {
      rows[x].push_back(table.results(Experiment::binary(x, y)));
      cols[x].push_back(table.results(Experiment::binary(y, x)));
    }
  }
  auto push_cached = [](Key& k, const StateSet* rs, const Partition& part) {
    if (!rs) k.push_back(kSep);
    else push_set(k, image(*rs, part));
  };

  Partition part = Partition::single(n);
  std::size_t count = 0;
  while (true) {
    std::vector<Key> sig(n);
    for (StateId x = 0; x < n; ++x) {
      Key& k = sig[x];
      k.push_back(part.block_of(x));
      push_cached(k, unary[x], part);
      k.push_back(kSep);
      for (const StateSet* rs : rows[x]) push_cached(k, rs, part);
      k.push_back(kSep);
      for (const StateSet* rs : cols[x]) push_cached(k, rs, part);
    }
    Partition next = from_signatures(sig);
    ++count;
    if (next.num_blocks() == part.num_blocks()) {
      next = split_partners(next);
      if (next.num_blocks() == part.num_blocks()) {
        if (rounds) *rounds = count;
        return next;
      }
    }
    part = std::move(next);
  }
}

Partition refine_lts(const LtsTable& table, std::size_t* rounds) {
  const std::size_t n = table.size();
  Partition part = Partition::single(n);
  std::size_t count = 0;
  while (true) {
    std::vector<std::size_t> key(n);
    std::map<std::pair<std::size_t, std::set<std::pair<std::string, std::size_t>>>, std::size_t> ids;
    for (StateId s = 0; s < n; ++s) {
      std::set<std::pair<std::string, std::size_t>> out;
      auto it = table.trans.find(s);
      if (it != table.trans.end())
        for (const auto& [l, t] : it->second) out.emplace(l, part.block_of(t));
      key[s] = ids.emplace(std::make_pair(part.block_of(s), std::move(out)), ids.size()).first->second;
    }
    Partition next = Partition::from_keys(key);
    ++count;
    if (next.num_blocks() == part.num_blocks()) {
      if (rounds) *rounds = count;
      return next;
    }
    part = std::move(next);
  }
}

bool satisfies_back_and_forth(const DialgebraTable& table, const Partition& p) {
  if (p.num_states() != table.size()) return false;
  std::map<std::size_t, std::set<std::size_t>> unary;
  for (StateId x = 0; x < table.size(); ++x) {
    auto it = table.unary.find(x);
    std::set<std::size_t> img = it == table.unary.end() ? std::set<std::size_t>{kSep} : image(it->second, p);
    auto [at, added] = unary.emplace(p.block_of(x), img);
    if (!added && at->second != img) return false;
  }
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::size_t>> binary;
  for (const auto& [e, rs] : table.binary) {
    auto img = image(rs, p);
    auto [at, added] = binary.emplace(std::make_pair(p.block_of(e.first), p.block_of(e.second)), img);
    if (!added && at->second != img) return false;
  }
  return true;
}

DialgebraTable quotient(const DialgebraTable& table, const Partition& p) {
  DialgebraTable q;
  for (const auto& b : p.blocks()) q.space.intern(table.space[b.front()]);
  for (const auto& [s, rs] : table.unary) {
    auto& dst = q.unary[p.block_of(s)];
    for (StateId t : rs) dst.insert(p.block_of(t));
  }
  for (const auto& [e, rs] : table.binary) {
    auto& dst = q.binary[{p.block_of(e.first), p.block_of(e.second)}];
    for (StateId t : rs) dst.insert(p.block_of(t));
  }
  q.unary_complete = table.unary_complete;
  q.binary_complete = table.binary_complete;
  q.budget_exhausted = table.budget_exhausted;
  return q;
}

bool is_homomorphism(const DialgebraTable& table, const Partition& p, const DialgebraTable& q) {
  for (const auto& [s, rs] : table.unary) {
    const StateSet* img = q.results(Experiment::unary(p.block_of(s)));
    auto want = image(rs, p);
    if (!img || *img != StateSet(want.begin(), want.end())) return false;
  }
  for (const auto& [e, rs] : table.binary) {
    const StateSet* img = q.results(Experiment::binary(p.block_of(e.first), p.block_of(e.second)));
    auto want = image(rs, p);
    if (!img || *img != StateSet(want.begin(), want.end())) return false;
  }
  return true;
}

namespace {

// Literal reading of the condition: every pair of related experiments.
bool back_and_forth_verbatim(const DialgebraTable& table, const std::vector<std::size_t>& blk) {
  const std::size_t n = table.size();
  auto img = [&](const StateSet& s) {
    std::set<std::size_t> out;
    for (StateId t : s) out.insert(blk[t]);
    return out;
  };
  for (StateId x1 = 0; x1 < n; ++x1) {
    for (StateId x2 = x1 + 1; x2 < n; ++x2) {
      if (blk[x1] != blk[x2]) continue;
      const StateSet* u1 = table.results(Experiment::unary(x1));
      const StateSet* u2 = table.results(Experiment::unary(x2));
      if (!u1 != !u2) return false;
      if (u1 && img(*u1) != img(*u2)) return false;
    }
  }
  for (const auto& [e1, r1] : table.binary)
    for (const auto& [e2, r2] : table.binary)
      if (blk[e1.first] == blk[e2.first] && blk[e1.second] == blk[e2.second] && img(r1) != img(r2))
        return false;
  return true;
}

}  // namespace

Partition brute_force_bisim(const DialgebraTable& table) {
  const std::size_t n = table.size();
  if (n > 6) throw TooManyStates("brute force is limited to 6 states, table has " + std::to_string(n));
  std::vector<Partition> kept;
  if (n == 0) return Partition();
  // Restricted growth strings enumerate each set partition once.
  std::vector<std::size_t> rgs(n, 0);
  while (true) {
    if (back_and_forth_verbatim(table, rgs)) kept.push_back(Partition::from_keys(rgs));
    std::size_t i = n;
    while (i-- > 1) {
      std::size_t mx = 0;
      for (std::size_t j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  const Partition* best = nullptr;
  for (const auto& p : kept)
    if (!best || p.num_blocks() < best->num_blocks()) best = &p;
  for (const auto& p : kept)
    if (!p.refines(*best)) throw Error("no coarsest back-and-forth partition");
  return *best;
}

}  // namespace dialg
