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

#include "dialg/term.hpp"

#include <algorithm>

namespace dialg {

const char* to_string(Calculus c) { return c == Calculus::Ccs ? "ccs" : "pi"; }

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

bool is_user_name(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return s != "tau" && s != "nu";
}

bool is_internal_name(const std::string& s) {
  if (s.size() < 2 || s[0] != '#') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

std::optional<Calculus> Prefix::calculus() const {
  switch (kind) {
    case Kind::Tau: return std::nullopt;
    case Kind::CcsIn:
    case Kind::CcsOut: return Calculus::Ccs;
    default: return Calculus::Pi;
  }
}

Term Term::sum(std::vector<Summand> summands) {
  Term t;
  t.summands_ = std::move(summands);
  return t;
}

Term Term::prefixed(Prefix prefix, Term continuation) {
  std::vector<Summand> one;
  one.push_back(Summand{std::move(prefix), std::move(continuation)});
  return sum(std::move(one));
}

Term Term::par(std::vector<Term> components) {
  std::vector<Term> flat;
  for (auto& c : components) {
    if (c.kind_ == Kind::Par) {
      for (auto& cc : c.children_) flat.push_back(std::move(cc));
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return nil();
  if (flat.size() == 1) return std::move(flat.front());
  Term t;
  t.kind_ = Kind::Par;
  t.children_ = std::move(flat);
  return t;
}

Term Term::nu(Name binder, Term body) {
  Term t;
  t.kind_ = Kind::Nu;
  t.binder_ = std::move(binder);
  t.children_.push_back(std::move(body));
  return t;
}

Term Term::restrict(const std::vector<Name>& binders, std::vector<Term> components) {
  Term t = par(std::move(components));
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) t = nu(*it, std::move(t));
  return t;
}

bool operator==(const Term& a, const Term& b) {
  return a.kind_ == b.kind_ && a.binder_ == b.binder_ && a.summands_ == b.summands_ &&
         a.children_ == b.children_;
}

namespace {

void collect_calculus(const Term& t, std::optional<Calculus>& seen) {
  auto note = [&](std::optional<Calculus> c) {
    if (!c) return;
    if (seen && *seen != *c) throw CalculusMismatch("term mixes CCS and pi prefixes");
    seen = c;
  };
  switch (t.kind()) {
    case Term::Kind::Sum:
      for (const auto& s : t.summands()) {
        note(s.prefix.calculus());
        collect_calculus(s.continuation, seen);
      }
      break;
    case Term::Kind::Par:
      for (const auto& c : t.components()) collect_calculus(c, seen);
      break;
    case Term::Kind::Nu: collect_calculus(t.body(), seen); break;
  }
}

void collect_free(const Term& t, std::multiset<Name>& bound, NameSet& out) {
  auto add = [&](const Name& n) {
    if (!n.empty() && !bound.count(n)) out.insert(n);
  };
  switch (t.kind()) {
    case Term::Kind::Sum:
      for (const auto& s : t.summands()) {
        add(s.prefix.channel);
        if (s.prefix.kind == Prefix::Kind::PiOut) add(s.prefix.object);
        if (s.prefix.kind == Prefix::Kind::PiIn) {
          auto it = bound.insert(s.prefix.object);
          collect_free(s.continuation, bound, out);
          bound.erase(it);
        } else {
          collect_free(s.continuation, bound, out);
        }
      }
      break;
    case Term::Kind::Par:
      for (const auto& c : t.components()) collect_free(c, bound, out);
      break;
    case Term::Kind::Nu: {
      auto it = bound.insert(t.binder());
      collect_free(t.body(), bound, out);
      bound.erase(it);
      break;
    }
  }
}

void collect_all(const Term& t, NameSet& out) {
  switch (t.kind()) {
    case Term::Kind::Sum:
      for (const auto& s : t.summands()) {
        if (!s.prefix.channel.empty()) out.insert(s.prefix.channel);
        if (!s.prefix.object.empty()) out.insert(s.prefix.object);
        collect_all(s.continuation, out);
      }
      break;
    case Term::Kind::Par:
      for (const auto& c : t.components()) collect_all(c, out);
      break;
    case Term::Kind::Nu:
      out.insert(t.binder());
      collect_all(t.body(), out);
      break;
  }
}

Name rename(const Name& n, const Name& datum, const Name& var) { return n == var ? datum : n; }

Term substitute_in(const Term& t, const Name& datum, const Name& var);

// Shared binder clause: returns the (possibly alpha-renamed) binder and body.
std::pair<Name, Term> under_binder(const Name& x, const Term& body, const Name& datum, const Name& var) {
  if (x == var) return {x, body};
  NameSet body_free = free_names(body);
  if (!body_free.count(var)) return {x, body};
  if (x == datum) {
    NameSet used = all_names(body);
    used.insert(datum);
    used.insert(var);
    Name fresh = fresh_name(used);
    Term renamed = substitute_in(body, fresh, x);
    return {fresh, substitute_in(renamed, datum, var)};
  }
  return {x, substitute_in(body, datum, var)};
}

Term substitute_in(const Term& t, const Name& datum, const Name& var) {
  switch (t.kind()) {
    case Term::Kind::Sum: {
      std::vector<Summand> out;
      out.reserve(t.summands().size());
      for (const auto& s : t.summands()) {
        Prefix p = s.prefix;
        p.channel = rename(p.channel, datum, var);
        if (p.kind == Prefix::Kind::PiOut) p.object = rename(p.object, datum, var);
        if (p.kind == Prefix::Kind::PiIn) {
          auto [x, body] = under_binder(p.object, s.continuation, datum, var);
          p.object = x;
          out.push_back(Summand{p, std::move(body)});
        } else {
          out.push_back(Summand{p, substitute_in(s.continuation, datum, var)});
        }
      }
      return Term::sum(std::move(out));
    }
    case Term::Kind::Par: {
      std::vector<Term> out;
      for (const auto& c : t.components()) out.push_back(substitute_in(c, datum, var));
      return Term::par(std::move(out));
    }
    case Term::Kind::Nu: {
      auto [x, body] = under_binder(t.binder(), t.body(), datum, var);
      return Term::nu(x, std::move(body));
    }
  }
  return t;
}

Term refresh_in(const Term& t, NameSet& used) {
  switch (t.kind()) {
    case Term::Kind::Sum: {
      std::vector<Summand> out;
      for (const auto& s : t.summands()) {
        if (s.prefix.kind == Prefix::Kind::PiIn) {
          Name x = fresh_name(used);
          used.insert(x);
          Term body = substitute(s.continuation, x, s.prefix.object);
          out.push_back(Summand{Prefix::pi_in(s.prefix.channel, x), refresh_in(body, used)});
        } else {
          out.push_back(Summand{s.prefix, refresh_in(s.continuation, used)});
        }
      }
      return Term::sum(std::move(out));
    }
    case Term::Kind::Par: {
      std::vector<Term> out;
      for (const auto& c : t.components()) out.push_back(refresh_in(c, used));
      return Term::par(std::move(out));
    }
    case Term::Kind::Nu: {
      Name x = fresh_name(used);
      used.insert(x);
      Term body = substitute(t.body(), x, t.binder());
      return Term::nu(x, refresh_in(body, used));
    }
  }
  return t;
}

enum class Ctx { Top, ParOperand, PrefixBody };

void print(const Term& t, Ctx ctx, std::string& out);

void print_summand(const Summand& s, std::string& out) {
  out += pretty(s.prefix);
  out += '.';
  print(s.continuation, Ctx::PrefixBody, out);
}

void print(const Term& t, Ctx ctx, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Sum: {
      const auto& ss = t.summands();
      if (ss.empty()) {
        out += '0';
        return;
      }
      bool parens = ss.size() > 1 && ctx == Ctx::PrefixBody;
      if (parens) out += '(';
      for (std::size_t i = 0; i < ss.size(); ++i) {
        if (i) out += " + ";
        print_summand(ss[i], out);
      }
      if (parens) out += ')';
      return;
    }
    case Term::Kind::Par: {
      bool parens = ctx == Ctx::PrefixBody;
      if (parens) out += '(';
      const auto& cs = t.components();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += " | ";
        print(cs[i], Ctx::ParOperand, out);
      }
      if (parens) out += ')';
      return;
    }
    case Term::Kind::Nu: {
      bool parens = ctx != Ctx::Top;
      if (parens) out += '(';
      out += "nu ";
      out += t.binder();
      out += ". ";
      print(t.body(), Ctx::Top, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::optional<Calculus> calculus_of(const Term& t) {
  std::optional<Calculus> seen;
  collect_calculus(t, seen);
  return seen;
}

NameSet free_names(const Term& t) {
  NameSet out;
  std::multiset<Name> bound;
  collect_free(t, bound, out);
  return out;
}

NameSet all_names(const Term& t) {
  NameSet out;
  collect_all(t, out);
  return out;
}

Name fresh_name(const NameSet& used) {
  for (std::size_t k = 0;; ++k) {
    Name n = "#" + std::to_string(k);
    if (!used.count(n)) return n;
  }
}

Term substitute(const Term& t, const Name& datum, const Name& var) {
  if (datum == var) return t;
  if (!free_names(t).count(var)) return t;
  return substitute_in(t, datum, var);
}

Term refresh_bound(const Term& t, const NameSet& avoid) {
  NameSet used = avoid;
  NameSet names = all_names(t);
  used.insert(names.begin(), names.end());
  return refresh_in(t, used);
}

std::size_t term_size(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Sum: {
      std::size_t n = 0;
      for (const auto& s : t.summands()) n += 1 + term_size(s.continuation);
      return n;
    }
    case Term::Kind::Par: {
      std::size_t n = t.components().size() - 1;
      for (const auto& c : t.components()) n += term_size(c);
      return n;
    }
    case Term::Kind::Nu: return 1 + term_size(t.body());
  }
  return 0;
}

std::size_t prefix_count(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Sum: {
      std::size_t n = 0;
      for (const auto& s : t.summands()) n += 1 + prefix_count(s.continuation);
      return n;
    }
    case Term::Kind::Par: {
      std::size_t n = 0;
      for (const auto& c : t.components()) n += prefix_count(c);
      return n;
    }
    case Term::Kind::Nu: return prefix_count(t.body());
  }
  return 0;
}

std::size_t binder_count(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Sum: {
      std::size_t n = 0;
      for (const auto& s : t.summands())
        n += (s.prefix.kind == Prefix::Kind::PiIn ? 1 : 0) + binder_count(s.continuation);
      return n;
    }
    case Term::Kind::Par: {
      std::size_t n = 0;
      for (const auto& c : t.components()) n += binder_count(c);
      return n;
    }
    case Term::Kind::Nu: return 1 + binder_count(t.body());
  }
  return 0;
}

std::string pretty(const Prefix& p) {
  switch (p.kind) {
    case Prefix::Kind::Tau: return "tau";
    case Prefix::Kind::CcsIn: return p.channel;
    case Prefix::Kind::CcsOut: return "~" + p.channel;
    case Prefix::Kind::PiIn: return p.channel + "(" + p.object + ")";
    case Prefix::Kind::PiOut: return p.channel + "<" + p.object + ">";
  }
  return {};
}

std::string pretty(const Term& t) {
  std::string out;
  print(t, Ctx::Top, out);
  return out;
}

}  // namespace dialg
