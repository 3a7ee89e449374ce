// Copyright 2026 The scirec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scirec/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scirec/error.hpp"

namespace scirec {

namespace {

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Taxonomy Taxonomy::from_concepts(std::vector<Concept> concepts) {
  Taxonomy t;
  for (auto& c : concepts) {
    if (c.id.empty()) throw Error("taxonomy: concept with empty id");
    if (c.pref_label.empty() || is_blank(c.pref_label))
      throw Error("taxonomy: empty pref_label on concept '" + c.id + "'");
    if (t.concepts_.count(c.id))
      throw Error("taxonomy: duplicate concept id '" + c.id + "'");
    t.concepts_.emplace(c.id, std::move(c));
  }

  for (const auto& [id, c] : t.concepts_) {
    for (const auto& p : c.parents) {
      if (!t.concepts_.count(p))
        throw Error("taxonomy: concept '" + id +
                    "' references unknown parent '" + p + "'");
      t.children_[p].push_back(id);
    }
    t.children_.try_emplace(id);  // leaves get an entry too
  }
  for (auto& [id, kids] : t.children_) std::sort(kids.begin(), kids.end());

  // Levels by BFS from the roots; level(c) = 1 + min over parents.
  std::deque<std::string> queue;
  for (const auto& [id, c] : t.concepts_) {
    if (c.parents.empty()) {
      t.level_[id] = 1;
      queue.push_back(id);
    }
  }
  while (!queue.empty()) {
    const std::string id = queue.front();
    queue.pop_front();
    const int next = t.level_.at(id) + 1;
    for (const auto& child : t.children_.at(id)) {
      auto it = t.level_.find(child);
      if (it == t.level_.end()) {
        t.level_[child] = next;
        queue.push_back(child);
      }
      // BFS visits in nondecreasing level order, so the first assignment
      // is already the minimum.
    }
  }

  if (t.level_.size() != t.concepts_.size()) {
    // Some concept never reached a root: its ancestry contains a cycle.
    for (const auto& [id, c] : t.concepts_) {
      if (!t.level_.count(id))
        throw Error("taxonomy: cycle detected involving concept '" + id + "'");
    }
  }

  for (const auto& [id, lvl] : t.level_) t.nodes_per_level_[lvl] += 1;
  return t;
}

bool Taxonomy::contains(const std::string& id) const {
  return concepts_.count(id) != 0;
}

const Concept& Taxonomy::concept_at(const std::string& id) const {
  auto it = concepts_.find(id);
  if (it == concepts_.end())
    throw Error("taxonomy: unknown concept id '" + id + "'");
  return it->second;
}

int Taxonomy::level_of(const std::string& id) const {
  auto it = level_.find(id);
  if (it == level_.end())
    throw Error("taxonomy: unknown concept id '" + id + "'");
  return it->second;
}

int Taxonomy::nodes_at_level(int level) const {
  auto it = nodes_per_level_.find(level);
  return it == nodes_per_level_.end() ? 0 : it->second;
}

const std::vector<std::string>& Taxonomy::children_of(
    const std::string& id) const {
  auto it = children_.find(id);
  if (it == children_.end())
    throw Error("taxonomy: unknown concept id '" + id + "'");
  return it->second;
}

Taxonomy load_taxonomy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("taxonomy: cannot open '" + path.string() + "'");

  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("taxonomy: parse error in '" + path.string() +
                "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("concepts") ||
      !doc["concepts"].is_array())
    throw Error("taxonomy: '" + path.string() +
                "' must be an object with a \"concepts\" array");

  std::vector<Concept> concepts;
  for (const auto& jc : doc["concepts"]) {
    Concept c;
    c.id = jc.value("id", "");
    c.pref_label = jc.value("pref_label", "");
    if (jc.contains("alt_labels"))
      for (const auto& l : jc["alt_labels"])
        c.alt_labels.insert(l.get<std::string>());
    if (jc.contains("parents"))
      for (const auto& p : jc["parents"]) c.parents.insert(p.get<std::string>());
    concepts.push_back(std::move(c));
  }
  return Taxonomy::from_concepts(std::move(concepts));
}

SynonymTable load_synonym_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("synonyms: cannot open '" + path.string() + "'");
  SynonymTable table;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error("synonyms: line " + std::to_string(lineno) +
                  " has no tab separator");
    table.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return table;
}

Taxonomy merge_synonyms(Taxonomy taxonomy, const SynonymTable& table) {
  // Validate first so a failing merge leaves no partial state observable.
  for (const auto& [id, label] : table) {
    if (!taxonomy.contains(id))
      throw Error("synonyms: unknown concept id '" + id + "'");
  }
  for (const auto& [id, label] : table)
    taxonomy.concepts_.at(id).alt_labels.insert(label);
  return taxonomy;
}

}  // namespace scirec
