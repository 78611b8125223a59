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

#include "dialg/corpus.hpp"

#include <random>

namespace dialg {

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, Calculus calculus, const std::vector<Name>& channels)
      : rng_(seed), calculus_(calculus), channels_(channels) {}

  Term term(std::size_t budget) {
    scope_.clear();
    next_var_ = 0;
    return gen(budget);
  }

  std::size_t draw(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  Name pick_channel() {
    std::size_t n = channels_.size() + scope_.size();
    std::size_t i = draw(n);
    return i < channels_.size() ? channels_[i] : scope_[i - channels_.size()];
  }

  Name new_var() { return "v" + std::to_string(next_var_++); }

  Prefix prefix_and_bind(Name* bound) {
    std::size_t r = draw(10);
    if (r == 0) return Prefix::tau();
    bool input = r <= 5;
    Name a = pick_channel();
    if (calculus_ == Calculus::Ccs) return input ? Prefix::ccs_in(a) : Prefix::ccs_out(a);
    if (!input) return Prefix::pi_out(a, pick_channel());
    *bound = new_var();
    return Prefix::pi_in(a, *bound);
  }

  Term under(const Name& bound, std::size_t budget) {
    if (bound.empty()) return gen(budget);
    scope_.push_back(bound);
    Term t = gen(budget);
    scope_.pop_back();
    return t;
  }

  Term gen(std::size_t budget) {
    if (budget == 0) return Term::nil();
    std::size_t r = draw(10);
    if (r < 6 || budget < 2) {
      std::size_t k = 1 + draw(std::min<std::size_t>(3, budget));
      std::vector<std::size_t> share(k, 1);
      for (std::size_t extra = draw(budget - k + 1); extra > 0; --extra) ++share[draw(k)];
      std::vector<Summand> ss;
      for (std::size_t i = 0; i < k; ++i) {
        Name bound;
        Prefix pre = prefix_and_bind(&bound);
        ss.push_back({pre, under(bound, share[i] - 1)});
      }
      return Term::sum(std::move(ss));
    }
    if (r < 9 && budget >= 3) {
      std::size_t left = 1 + draw(budget - 2);
      Term l = gen(left);
      Term rt = gen(budget - 1 - left);
      return Term::par({std::move(l), std::move(rt)});
    }
    if (calculus_ == Calculus::Ccs) return Term::nu(channels_[draw(channels_.size())], gen(budget - 1));
    Name x = new_var();
    return Term::nu(x, under(x, budget - 1));
  }

  std::mt19937_64 rng_;
  Calculus calculus_;
  std::vector<Name> channels_;
  std::vector<Name> scope_;
  std::size_t next_var_ = 0;
};

}  // namespace

std::vector<Term> gen_corpus(std::uint64_t seed, std::size_t count, std::size_t size_bound, Calculus calculus,
                             const std::vector<Name>& channels) {
  if (size_bound == 0) throw Error("size bound must be at least 1");
  if (channels.empty()) throw Error("corpus needs at least one channel");
  Generator g(seed, calculus, channels);
  std::vector<Term> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(g.term(g.draw(size_bound + 1)));
  return out;
}

}  // namespace dialg
