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

#include "dialg/table.hpp"

#include <algorithm>
#include <map>

namespace dialg {

std::pair<StateId, bool> StateSpace::intern(const CanonicalTerm& t) {
  auto [it, added] = index_.emplace(t.rendering(), states_.size());
  if (added) states_.push_back(t);
  return {it->second, added};
}

std::optional<StateId> StateSpace::find(const std::string& rendering) const {
  auto it = index_.find(rendering);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const StateSet* DialgebraTable::results(const Experiment& e) const {
  if (e.is_unary()) {
    auto it = unary.find(e.left);
    return it == unary.end() ? nullptr : &it->second;
  }
  return binary.find(e.left, *e.right);
}

BinaryResults::const_iterator::const_iterator(const BinaryResults* t, std::size_t row, std::size_t pos)
    : t_(t), row_(row), pos_(pos) {
  settle();
}

void BinaryResults::const_iterator::settle() {
  while (row_ < t_->rows_.size() && pos_ >= t_->rows_[row_].size()) {
    ++row_;
    pos_ = 0;
  }
}

BinaryResults::value_type BinaryResults::const_iterator::operator*() const {
  const Cell& c = t_->rows_[row_][pos_];
  return {Key{row_, c.right}, t_->sets_[c.slot]};
}

BinaryResults::const_iterator& BinaryResults::const_iterator::operator++() {
  ++pos_;
  settle();
  return *this;
}

std::vector<BinaryResults::Cell>::iterator BinaryResults::locate(const Key& k, bool& found) {
  if (rows_.size() <= k.first) rows_.resize(k.first + 1);
  auto& row = rows_[k.first];
  // Rows usually grow at the back.
  if (row.empty() || row.back().right < k.second) {
    found = false;
    return row.end();
  }
  auto it = std::lower_bound(row.begin(), row.end(), k.second,
                             [](const Cell& c, StateId r) { return c.right < r; });
  found = it != row.end() && it->right == k.second;
  return it;
}

bool BinaryResults::emplace(const Key& k, StateSet results) {
  bool found = false;
  auto it = locate(k, found);
  if (found) return false;
  std::uint32_t slot = 0;
  if (!results.empty()) {
    slot = static_cast<std::uint32_t>(sets_.size());
    sets_.push_back(std::move(results));
  }
  rows_[k.first].insert(it, Cell{k.second, slot});
  ++size_;
  return true;
}

StateSet& BinaryResults::operator[](const Key& k) {
  bool found = false;
  auto it = locate(k, found);
  if (!found) {
    it = rows_[k.first].insert(it, Cell{k.second, 0});
    ++size_;
  }
  if (it->slot == 0) {
    it->slot = static_cast<std::uint32_t>(sets_.size());
    sets_.emplace_back();
  }
  return sets_[it->slot];
}

const StateSet* BinaryResults::find(StateId left, StateId right) const {
  if (left >= rows_.size()) return nullptr;
  const auto& row = rows_[left];
  auto it = std::lower_bound(row.begin(), row.end(), right, [](const Cell& c, StateId r) { return c.right < r; });
  if (it == row.end() || it->right != right) return nullptr;
  return &sets_[it->slot];
}

bool operator==(const BinaryResults& a, const BinaryResults& b) {
  if (a.size() != b.size()) return false;
  for (auto i = a.begin(), j = b.begin(); i != a.end(); ++i, ++j) {
    auto x = *i;
    auto y = *j;
    if (x.first != y.first || x.second != y.second) return false;
  }
  return true;
}

Partition Partition::from_keys(const std::vector<std::size_t>& key) {
  Partition p;
  p.block_of_.resize(key.size());
  std::map<std::size_t, std::size_t> ids;
  for (StateId s = 0; s < key.size(); ++s) {
    auto [it, added] = ids.emplace(key[s], p.blocks_.size());
    if (added) p.blocks_.emplace_back();
    p.blocks_[it->second].push_back(s);
    p.block_of_[s] = it->second;
  }
  return p;
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> key(n);
  for (std::size_t i = 0; i < n; ++i) key[i] = i;
  return from_keys(key);
}

Partition Partition::single(std::size_t n) { return from_keys(std::vector<std::size_t>(n, 0)); }

bool Partition::refines(const Partition& coarser) const {
  if (coarser.num_states() != num_states()) return false;
  for (const auto& b : blocks_)
    for (StateId s : b)
      if (coarser.block_of(s) != coarser.block_of(b.front())) return false;
  return true;
}

}  // namespace dialg
