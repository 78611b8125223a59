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

#include "dialg/ccs.hpp"

#include "reaction.hpp"

namespace dialg {

CcsLabel CcsLabel::parse(const std::string& text) {
  if (text == "tau") return tau();
  if (!text.empty() && text[0] == '~') return out(text.substr(1));
  return in(text);
}

bool CcsLabel::complements(const CcsLabel& other) const {
  if (channel != other.channel) return false;
  return (kind == Kind::In && other.kind == Kind::Out) || (kind == Kind::Out && other.kind == Kind::In);
}

std::string CcsLabel::to_string() const {
  switch (kind) {
    case Kind::Tau: return "tau";
    case Kind::In: return channel;
    case Kind::Out: return "~" + channel;
  }
  return {};
}

namespace {

using RawStep = std::pair<CcsLabel, Term>;

CcsLabel label_of(const Prefix& p) {
  switch (p.kind) {
    case Prefix::Kind::Tau: return CcsLabel::tau();
    case Prefix::Kind::CcsIn: return CcsLabel::in(p.channel);
    case Prefix::Kind::CcsOut: return CcsLabel::out(p.channel);
    default: throw CalculusMismatch("lts_step expects a CCS term");
  }
}

// Structural operational semantics: (pre), (res), (par), (syn). The (str)
// rule is realised by canonicalising sources and destinations.
std::vector<RawStep> steps(const Term& t) {
  std::vector<RawStep> out;
  switch (t.kind()) {
    case Term::Kind::Sum:
      for (const auto& s : t.summands()) out.emplace_back(label_of(s.prefix), s.continuation);
      break;
    case Term::Kind::Nu:
      for (auto& [l, p] : steps(t.body()))
        if (l.channel != t.binder()) out.emplace_back(l, Term::nu(t.binder(), std::move(p)));
      break;
    case Term::Kind::Par: {
      const auto& cs = t.components();
      std::vector<std::vector<RawStep>> local;
      for (const auto& c : cs) local.push_back(steps(c));
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (const auto& [l, p] : local[i]) {
          std::vector<Term> parts = cs;
          parts[i] = p;
          out.emplace_back(l, Term::par(std::move(parts)));
        }
      }
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          for (const auto& [li, pi] : local[i]) {
            for (const auto& [lj, pj] : local[j]) {
              if (li.kind == CcsLabel::Kind::Tau || !li.complements(lj)) continue;
              std::vector<Term> parts = cs;
              parts[i] = pi;
              parts[j] = pj;
              out.emplace_back(CcsLabel::tau(), Term::par(std::move(parts)));
            }
          }
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::set<CcsTransition> lts_step(const CanonicalTerm& p) {
  detail::require_calculus(p.term(), Calculus::Ccs, "lts_step");
  std::set<CcsTransition> out;
  for (auto& [l, t] : steps(p.term())) out.emplace(l, canonicalize(t));
  return out;
}

std::set<CanonicalTerm> dialg_unary(const CanonicalTerm& p) {
  detail::require_calculus(p.term(), Calculus::Ccs, "dialg_unary");
  return detail::react_unary(p, detail::SyncRule::Syn);
}

std::set<CanonicalTerm> dialg_binary(const CanonicalTerm& p, const CanonicalTerm& q) {
  detail::require_calculus(p.term(), Calculus::Ccs, "dialg_binary");
  detail::require_calculus(q.term(), Calculus::Ccs, "dialg_binary");
  return detail::react_binary(p, q, detail::SyncRule::Syn);
}

}  // namespace dialg
