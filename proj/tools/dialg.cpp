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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dialg/bridge.hpp"
#include "dialg/corpus.hpp"
#include "dialg/engine.hpp"
#include "dialg/pi.hpp"
#include "dialg/serialize.hpp"
#include "json.hpp"

namespace {

using namespace dialg;

constexpr int kUsage = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Config {
  std::string calculus;
  std::string mode = "dialg";
  std::string policy = "witness";
  std::string pool;
  std::size_t max_states = 20000;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::vector<std::string> terms;
  std::size_t count = 10;
  std::size_t size = 6;
};

std::string read_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

std::vector<Term> read_terms(const Config& cfg, Calculus* calc) {
  std::vector<Term> out;
  std::vector<std::string> texts;
  for (const auto& t : cfg.terms) texts.push_back(read_arg(t));
  if (!cfg.calculus.empty()) {
    *calc = cfg.calculus == "pi" ? Calculus::Pi : Calculus::Ccs;
  } else {
    *calc = Calculus::Ccs;
    for (const auto& t : texts) {
      auto c = calculus_of(parse_any(t, false));
      if (c) {
        *calc = *c;
        break;
      }
    }
  }
  for (const auto& t : texts) out.push_back(parse_term(t, *calc));
  return out;
}

std::optional<NamePool> pool_of(const Config& cfg) {
  if (cfg.pool.empty()) return std::nullopt;
  std::vector<Name> names;
  std::stringstream in(cfg.pool);
  for (std::string n; std::getline(in, n, ',');) {
    if (!is_user_name(n) && !is_internal_name(n)) throw UsageError("invalid pool name: " + n);
    names.push_back(n);
  }
  return NamePool(names);
}

ChallengerPolicy policy_of(const Config& cfg, const NamePool& pool) {
  if (cfg.policy == "witness") return WitnessSet{pool};
  if (cfg.policy.rfind("closure:", 0) == 0) {
    std::size_t k = 0;
    try {
      k = std::stoul(cfg.policy.substr(8));
    } catch (const std::exception&) {
      throw UsageError("invalid policy: " + cfg.policy);
    }
    if (k < 1) throw UsageError("closure rounds must be at least 1");
    return BoundedClosure{k, std::nullopt};
  }
  throw UsageError("invalid policy: " + cfg.policy);
}

Mode mode_of(const Config& cfg, Calculus calc) {
  if (cfg.mode == "dialg") return calc == Calculus::Ccs ? Mode::CcsDialg : Mode::PiDialg;
  if (cfg.mode == "lts" && calc == Calculus::Ccs) return Mode::CcsLts;
  if (cfg.mode == "early" && calc == Calculus::Pi) return Mode::PiEarly;
  throw UsageError("mode " + cfg.mode + " is not available for " + to_string(calc));
}

void emit(const Config& cfg, const Document& doc) {
  if (cfg.format == "json") std::cout << to_json(doc);
  else if (cfg.format == "dot") std::cout << to_dot(doc);
  else std::cout << to_text(doc);
}

void require_terms(const Config& cfg, std::size_t n) {
  if (cfg.terms.size() != n) throw UsageError("expected " + std::to_string(n) + " term(s)");
}

int cmd_parse(const Config& cfg) {
  require_terms(cfg, 1);
  Calculus calc;
  Term t = read_terms(cfg, &calc)[0];
  CanonicalTerm c = canonicalize(t);
  NameSet fn = free_names(t);
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["calculus"] = to_string(calc);
    j["term"] = pretty(t);
    j["canonical"] = c.rendering();
    j["free_names"] = std::vector<Name>(fn.begin(), fn.end());
    j["size"] = term_size(t);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "term: " << pretty(t) << "\ncanonical: " << c.rendering() << "\nfree names:";
    for (const auto& n : fn) std::cout << " " << n;
    std::cout << "\nsize: " << term_size(t) << "\n";
  }
  return 0;
}

int cmd_lts(const Config& cfg) {
  if (cfg.terms.empty()) throw UsageError("expected at least one term");
  Calculus calc;
  auto terms = read_terms(cfg, &calc);
  std::vector<CanonicalTerm> init;
  for (const auto& t : terms) init.push_back(canonicalize(t));
  Document doc;
  if (calc == Calculus::Ccs) {
    doc = document(explore_lts(init, ccs_lts_step(), cfg.max_states));
  } else {
    NamePool pool = pool_of(cfg).value_or(NamePool::for_pi_system(terms));
    doc = document(explore_lts(init, pi_early_step(pool), cfg.max_states));
    doc.pool = pool.names();
  }
  emit(cfg, doc);
  return doc.budget_exhausted ? 2 : 0;
}

DialgebraTable explore_terms(const Config& cfg, std::vector<Term>& terms, Calculus calc, Document& doc) {
  Mode mode = calc == Calculus::Ccs ? Mode::CcsDialg : Mode::PiDialg;
  NamePool pool = pool_of(cfg).value_or(default_pool(mode, terms));
  ChallengerPolicy policy = policy_of(cfg, pool);
  std::vector<CanonicalTerm> init;
  for (const auto& t : terms) init.push_back(canonicalize(t));
  auto table = explore(init, calc == Calculus::Ccs ? Semantics::CcsDialg : Semantics::PiDialg, policy,
                       cfg.max_states);
  doc.policy = to_string(policy);
  doc.pool = pool.names();
  return table;
}

int cmd_dialg(const Config& cfg) {
  if (cfg.terms.empty()) throw UsageError("expected at least one term");
  Calculus calc;
  auto terms = read_terms(cfg, &calc);
  Document meta;
  auto table = explore_terms(cfg, terms, calc, meta);
  Document doc = document(table);
  doc.policy = meta.policy;
  doc.pool = meta.pool;
  emit(cfg, doc);
  return doc.budget_exhausted ? 2 : 0;
}

int cmd_quotient(const Config& cfg) {
  if (cfg.terms.empty()) throw UsageError("expected at least one term");
  Calculus calc;
  auto terms = read_terms(cfg, &calc);
  Document meta;
  auto table = explore_terms(cfg, terms, calc, meta);
  Partition p = refine_dialgebra(table);
  DialgebraTable q = quotient(table, p);
  Document doc = document(q);
  set_partition(doc, refine_dialgebra(q));
  doc.policy = meta.policy;
  doc.pool = meta.pool;
  emit(cfg, doc);
  return doc.budget_exhausted ? 2 : 0;
}

int cmd_bisim(const Config& cfg) {
  require_terms(cfg, 2);
  Calculus calc;
  auto terms = read_terms(cfg, &calc);
  Mode mode = mode_of(cfg, calc);
  BisimOptions opts;
  opts.pool = pool_of(cfg);
  opts.max_states = cfg.max_states;
  NamePool pool = opts.pool.value_or(default_pool(mode, terms));
  opts.pool = pool;
  if (mode == Mode::CcsDialg || mode == Mode::PiDialg) opts.policy = policy_of(cfg, pool);
  BisimResult res = bisimilar(terms[0], terms[1], mode, opts);
  Document doc = std::visit([](const auto& t) { return document(t); }, res.table);
  set_partition(doc, res.partition);
  doc.verdict = to_string(res.verdict);
  if (mode == Mode::CcsDialg || mode == Mode::PiDialg) doc.policy = to_string(res.policy);
  doc.pool = res.pool.names();
  emit(cfg, doc);
  switch (res.verdict) {
    case Verdict::Bisimilar: return 0;
    case Verdict::NotBisimilar: return 1;
    case Verdict::Unknown: return 2;
  }
  return 2;
}

int cmd_compare(const Config& cfg) {
  require_terms(cfg, 1);
  Calculus calc;
  auto terms = read_terms(cfg, &calc);
  if (calc != Calculus::Ccs) throw UsageError("compare needs a CCS term");
  NamePool pool = pool_of(cfg).value_or(NamePool::for_ccs_system(terms));
  ComparisonReport rep = compare_semantics(terms[0], pool, cfg.max_states);
  std::string verdict = rep.inconclusive ? "inconclusive" : rep.pass() ? "pass" : "fail";
  if (cfg.format == "json") {
    Document doc = document(rep.native_dialgebra);
    for (const auto& [s, ts] : rep.native_lts.trans)
      for (const auto& [l, t] : ts) doc.lts.emplace_back(s, l, t);
    doc.verdict = verdict;
    doc.policy = "witness";
    doc.pool = pool.names();
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(doc));
    nlohmann::ordered_json mism = nlohmann::ordered_json::array();
    for (const auto& e : rep.dialgebra_mismatches) {
      if (e.is_unary()) mism.push_back({{"src", e.left}});
      else mism.push_back({{"left", e.left}, {"right", *e.right}});
    }
    j["dialgebra_mismatches"] = mism;
    j["coalgebra_mismatches"] = rep.coalgebra_mismatches;
    j["experiments_checked"] = rep.experiments_checked;
    j["states_checked"] = rep.states_checked;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "states: " << rep.native_dialgebra.size() << "\nexperiments checked: " << rep.experiments_checked
              << "\nstates checked: " << rep.states_checked
              << "\ndialgebra mismatches: " << rep.dialgebra_mismatches.size()
              << "\ncoalgebra mismatches: " << rep.coalgebra_mismatches.size() << "\nverdict: " << verdict << "\n";
  }
  return rep.inconclusive ? 2 : rep.pass() ? 0 : 1;
}

int cmd_barbs(const Config& cfg) {
  require_terms(cfg, 1);
  Calculus calc;
  auto terms = read_terms(cfg, &calc);
  if (calc != Calculus::Pi) throw UsageError("barbs needs a pi term");
  auto bs = barbs(canonicalize(terms[0]));
  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& [a, pol] : bs) j.push_back({{"channel", a}, {"polarity", pol == Polarity::In ? "in" : "out"}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [a, pol] : bs) std::cout << (pol == Polarity::In ? "" : "~") << a << "\n";
  }
  return 0;
}

int cmd_gen(const Config& cfg) {
  Calculus calc = cfg.calculus == "pi" ? Calculus::Pi : Calculus::Ccs;
  std::vector<Name> channels{"a", "b", "c"};
  if (auto pool = pool_of(cfg)) channels = pool->names();
  for (const auto& n : channels)
    if (!is_user_name(n)) throw UsageError("invalid channel name: " + n);
  if (cfg.size < 1) throw UsageError("size bound must be at least 1");
  auto terms = gen_corpus(cfg.seed, cfg.count, cfg.size, calc, channels);
  if (cfg.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& t : terms) j.push_back(pretty(t));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& t : terms) std::cout << pretty(t) << "\n";
  }
  return 0;
}

void add_common(CLI::App* sub, Config& cfg, bool with_terms = true) {
  sub->add_option("--calculus", cfg.calculus, "ccs or pi (inferred when omitted)")
      ->check(CLI::IsMember({"ccs", "pi"}));
  sub->add_option("--pool", cfg.pool, "comma-separated channel pool");
  sub->add_option("--max-states", cfg.max_states, "state budget");
  sub->add_option("--format", cfg.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  if (with_terms) sub->add_option("terms", cfg.terms, "terms, or @file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dialgebra workbench for CCS and the pi-calculus"};
  app.require_subcommand(1);
  Config cfg;

  auto* parse = app.add_subcommand("parse", "parse and normalise a term");
  auto* lts = app.add_subcommand("lts", "explore the labelled transitions");
  auto* dia = app.add_subcommand("dialg", "explore the reaction dialgebra");
  auto* bis = app.add_subcommand("bisim", "decide bisimilarity of two terms");
  auto* quo = app.add_subcommand("quotient", "bisimilarity quotient of the explored dialgebra");
  auto* cmp = app.add_subcommand("compare", "check reactions against transitions");
  auto* brb = app.add_subcommand("barbs", "immediate barbs of a pi term");
  auto* gen = app.add_subcommand("gen", "generate a random corpus");

  for (auto* s : {parse, lts, dia, bis, quo, cmp, brb}) add_common(s, cfg);
  for (auto* s : {dia, bis, quo})
    s->add_option("--policy", cfg.policy, "witness or closure:K");
  bis->add_option("--mode", cfg.mode, "dialg, lts or early")->check(CLI::IsMember({"dialg", "lts", "early"}));
  add_common(gen, cfg, false);
  gen->add_option("--seed", cfg.seed, "random seed");
  gen->add_option("--count", cfg.count, "number of terms");
  gen->add_option("--size", cfg.size, "size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*parse) return cmd_parse(cfg);
    if (*lts) return cmd_lts(cfg);
    if (*dia) return cmd_dialg(cfg);
    if (*bis) return cmd_bisim(cfg);
    if (*quo) return cmd_quotient(cfg);
    if (*cmp) return cmd_compare(cfg);
    if (*brb) return cmd_barbs(cfg);
    if (*gen) return cmd_gen(cfg);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
