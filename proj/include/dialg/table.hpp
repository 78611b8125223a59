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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dialg/canonical.hpp"

namespace dialg {

using StateId = std::size_t;
using StateSet = std::set<StateId>;

/// An element of X + X*X: one state alone, or an ordered pair interacting.
struct Experiment {
  StateId left = 0;
  std::optional<StateId> right;

  static Experiment unary(StateId s) { return {s, std::nullopt}; }
  static Experiment binary(StateId s, StateId t) { return {s, t}; }
  bool is_unary() const { return !right.has_value(); }

  auto operator<=>(const Experiment&) const = default;
};

/// Append-only table of canonical states, deduplicated by rendering.
class StateSpace {
 public:
  /// Returns the id and whether the state was newly added.
  std::pair<StateId, bool> intern(const CanonicalTerm& t);
  std::optional<StateId> find(const std::string& rendering) const;
  const CanonicalTerm& operator[](StateId id) const { return states_[id]; }
  const std::vector<CanonicalTerm>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }

 private:
  std::vector<CanonicalTerm> states_;
  std::unordered_map<std::string, StateId> index_;
};

/// Results of binary experiments, one row per left state, ordered by the
/// right state. Empty results share storage.
class BinaryResults {
 public:
  using Key = std::pair<StateId, StateId>;
  using value_type = std::pair<Key, const StateSet&>;

  class const_iterator {
   public:
    value_type operator*() const;
    const_iterator& operator++();
    bool operator==(const const_iterator& o) const { return row_ == o.row_ && pos_ == o.pos_; }

   private:
    friend class BinaryResults;
    const_iterator(const BinaryResults* t, std::size_t row, std::size_t pos);
    void settle();
    const BinaryResults* t_;
    std::size_t row_;
    std::size_t pos_;
  };

  /// Records the result unless the experiment is already present.
  bool emplace(const Key& k, StateSet results);
  StateSet& operator[](const Key& k);
  const StateSet* find(StateId left, StateId right) const;
  bool contains(StateId left, StateId right) const { return find(left, right) != nullptr; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  const_iterator begin() const { return const_iterator(this, 0, 0); }
  const_iterator end() const { return const_iterator(this, rows_.size(), 0); }

  friend bool operator==(const BinaryResults& a, const BinaryResults& b);

 private:
  struct Cell {
    StateId right;
    std::uint32_t slot;  // 0: empty result
  };
  std::vector<Cell>::iterator locate(const Key& k, bool& found);

  std::vector<std::vector<Cell>> rows_;
  std::vector<StateSet> sets_{StateSet{}};
  std::size_t size_ = 0;
};

/// Explored fragment of a dialgebra f : X + X*X -> P(X).
struct DialgebraTable {
  StateSpace space;
  std::map<StateId, StateSet> unary;
  BinaryResults binary;
  /// Unary results recorded for every state.
  bool unary_complete = true;
  /// Every binary experiment the challenger policy admits is recorded.
  bool binary_complete = true;
  bool budget_exhausted = false;

  const StateSet* results(const Experiment& e) const;
  std::size_t size() const { return space.size(); }
};

/// Explored fragment of a labelled transition system X -> P(L x X).
struct LtsTable {
  StateSpace space;
  std::map<StateId, std::set<std::pair<std::string, StateId>>> trans;
  bool budget_exhausted = false;

  std::size_t size() const { return space.size(); }
};

/// Equivalence classes over state ids. Blocks are numbered by their least
/// member and listed in ascending order.
class Partition {
 public:
  Partition() = default;
  static Partition from_keys(const std::vector<std::size_t>& key);
  static Partition discrete(std::size_t n);
  static Partition single(std::size_t n);

  std::size_t block_of(StateId s) const { return block_of_[s]; }
  bool same_block(StateId a, StateId b) const { return block_of_[a] == block_of_[b]; }
  const std::vector<std::vector<StateId>>& blocks() const { return blocks_; }
  std::size_t num_states() const { return block_of_.size(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  /// Every block of this partition lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.block_of_ == b.block_of_; }

 private:
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<StateId>> blocks_;
};

}  // namespace dialg
