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

#include "dialg/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace dialg {

using nlohmann::ordered_json;

Document document(const DialgebraTable& table) {
  Document doc;
  for (const auto& s : table.space.states()) doc.states.push_back(s.rendering());
  for (const auto& [s, rs] : table.unary) doc.unary.emplace_back(s, std::vector<StateId>(rs.begin(), rs.end()));
  for (const auto& [e, rs] : table.binary)
    doc.binary.emplace_back(e.first, e.second, std::vector<StateId>(rs.begin(), rs.end()));
  doc.budget_exhausted = table.budget_exhausted;
  return doc;
}

Document document(const LtsTable& table) {
  Document doc;
  for (const auto& s : table.space.states()) doc.states.push_back(s.rendering());
  for (const auto& [s, ts] : table.trans)
    for (const auto& [l, t] : ts) doc.lts.emplace_back(s, l, t);
  doc.budget_exhausted = table.budget_exhausted;
  return doc;
}

void set_partition(Document& doc, const Partition& p) { doc.partition = p.blocks(); }

std::string to_json(const Document& doc) {
  ordered_json j;
  j["states"] = doc.states;
  j["unary"] = ordered_json::array();
  for (const auto& [s, d] : doc.unary) j["unary"].push_back({{"src", s}, {"dst", d}});
  j["binary"] = ordered_json::array();
  for (const auto& [l, r, d] : doc.binary) j["binary"].push_back({{"left", l}, {"right", r}, {"dst", d}});
  j["lts"] = ordered_json::array();
  for (const auto& [s, l, t] : doc.lts) j["lts"].push_back({{"src", s}, {"label", l}, {"dst", t}});
  j["partition"] = doc.partition;
  j["verdict"] = doc.verdict ? ordered_json(*doc.verdict) : ordered_json(nullptr);
  j["policy"] = doc.policy ? ordered_json(*doc.policy) : ordered_json(nullptr);
  j["pool"] = doc.pool;
  j["budget_exhausted"] = doc.budget_exhausted;
  return j.dump(2) + "\n";
}

Document parse_json(const std::string& text) {
  try {
    auto j = ordered_json::parse(text);
    Document doc;
    doc.states = j.at("states").get<std::vector<std::string>>();
    for (const auto& u : j.at("unary")) doc.unary.emplace_back(u.at("src"), u.at("dst").get<std::vector<StateId>>());
    for (const auto& b : j.at("binary"))
      doc.binary.emplace_back(b.at("left"), b.at("right"), b.at("dst").get<std::vector<StateId>>());
    for (const auto& e : j.at("lts")) doc.lts.emplace_back(e.at("src"), e.at("label"), e.at("dst"));
    doc.partition = j.at("partition").get<std::vector<std::vector<StateId>>>();
    if (!j.at("verdict").is_null()) doc.verdict = j["verdict"].get<std::string>();
    if (!j.at("policy").is_null()) doc.policy = j["policy"].get<std::string>();
    doc.pool = j.at("pool").get<std::vector<Name>>();
    doc.budget_exhausted = j.at("budget_exhausted").get<bool>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed document: ") + e.what());
  }
}

namespace {

StateSpace space_of(const Document& doc) {
  StateSpace space;
  for (const auto& r : doc.states) {
    CanonicalTerm t = canonicalize(parse_any(r, true));
    if (t.rendering() != r) throw Error("state is not in normal form: " + r);
    space.intern(t);
  }
  return space;
}

void check_id(const Document& doc, StateId s) {
  if (s >= doc.states.size()) throw Error("state id out of range: " + std::to_string(s));
}

}  // namespace

DialgebraTable dialgebra_of(const Document& doc) {
  DialgebraTable t;
  t.space = space_of(doc);
  for (const auto& [s, d] : doc.unary) {
    check_id(doc, s);
    for (StateId x : d) check_id(doc, x);
    t.unary[s] = StateSet(d.begin(), d.end());
  }
  for (const auto& [l, r, d] : doc.binary) {
    check_id(doc, l);
    check_id(doc, r);
    for (StateId x : d) check_id(doc, x);
    t.binary[{l, r}] = StateSet(d.begin(), d.end());
  }
  t.unary_complete = t.unary.size() == t.space.size();
  t.budget_exhausted = doc.budget_exhausted;
  if (t.budget_exhausted) t.binary_complete = false;
  return t;
}

LtsTable lts_of(const Document& doc) {
  LtsTable t;
  t.space = space_of(doc);
  // A complete exploration lists every state, with or without moves.
  if (!doc.budget_exhausted)
    for (StateId s = 0; s < t.space.size(); ++s) t.trans[s];
  for (const auto& [s, l, d] : doc.lts) {
    check_id(doc, s);
    check_id(doc, d);
    t.trans[s].emplace(l, d);
  }
  t.budget_exhausted = doc.budget_exhausted;
  return t;
}

Partition partition_of(const Document& doc) {
  std::vector<std::size_t> key(doc.states.size(), 0);
  std::vector<bool> seen(doc.states.size(), false);
  for (std::size_t b = 0; b < doc.partition.size(); ++b) {
    for (StateId s : doc.partition[b]) {
      check_id(doc, s);
      if (seen[s]) throw Error("state listed in two blocks");
      seen[s] = true;
      key[s] = b;
    }
  }
  for (bool s : seen)
    if (!s) throw Error("partition does not cover every state");
  return Partition::from_keys(key);
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string id_list(const std::vector<StateId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? ", " : "") + std::to_string(ids[i]);
  return out + "}";
}

}  // namespace

std::string to_dot(const Document& doc) {
  std::ostringstream os;
  os << "digraph dialg {\n";
  for (std::size_t s = 0; s < doc.states.size(); ++s) os << "  s" << s << " [label=" << quote(doc.states[s]) << "];\n";
  for (const auto& [s, d] : doc.unary)
    for (StateId t : d) os << "  s" << s << " -> s" << t << ";\n";
  std::size_t i = 0;
  for (const auto& [l, r, d] : doc.binary) {
    os << "  exp_" << i << " [shape=point];\n";
    os << "  s" << l << " -> exp_" << i << " [style=dashed, label=\"1\"];\n";
    os << "  s" << r << " -> exp_" << i << " [style=dashed, label=\"2\"];\n";
    for (StateId t : d) os << "  exp_" << i << " -> s" << t << ";\n";
    ++i;
  }
  for (const auto& [s, l, t] : doc.lts) os << "  s" << s << " -> s" << t << " [label=" << quote(l) << "];\n";
  os << "}\n";
  return os.str();
}

std::string to_text(const Document& doc) {
  std::ostringstream os;
  os << "states:\n";
  for (std::size_t s = 0; s < doc.states.size(); ++s) os << "  " << s << ": " << doc.states[s] << "\n";
  if (!doc.unary.empty()) {
    os << "unary:\n";
    for (const auto& [s, d] : doc.unary) os << "  " << s << " -> " << id_list(d) << "\n";
  }
  if (!doc.binary.empty()) {
    os << "binary:\n";
    for (const auto& [l, r, d] : doc.binary) os << "  (" << l << ", " << r << ") -> " << id_list(d) << "\n";
  }
  if (!doc.lts.empty()) {
    os << "lts:\n";
    for (const auto& [s, l, t] : doc.lts) os << "  " << s << " --" << l << "--> " << t << "\n";
  }
  if (!doc.partition.empty()) {
    os << "partition:";
    for (const auto& b : doc.partition) os << " " << id_list(b);
    os << "\n";
  }
  if (doc.policy) os << "policy: " << *doc.policy << "\n";
  if (!doc.pool.empty()) {
    os << "pool:";
    for (const auto& n : doc.pool) os << " " << n;
    os << "\n";
  }
  if (doc.verdict) os << "verdict: " << *doc.verdict << "\n";
  if (doc.budget_exhausted) os << "budget exhausted\n";
  return os.str();
}

}  // namespace dialg
