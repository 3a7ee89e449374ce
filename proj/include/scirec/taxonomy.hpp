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

#ifndef SCIREC_TAXONOMY_HPP_
#define SCIREC_TAXONOMY_HPP_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace scirec {

struct Concept {
  std::string id;
  std::string pref_label;
  std::set<std::string> alt_labels;
  std::set<std::string> parents;  // empty => root
};

/// Hierarchical knowledge base. Immutable once constructed; parent links
/// form a DAG, each concept carries a level (roots are level 1, otherwise
/// 1 + shortest path to any root).
class Taxonomy {
 public:
  Taxonomy() = default;

  // Validates and builds levels, children adjacency and the per-level
  // histogram. Throws Error on duplicate id, dangling parent, empty
  // pref_label, or a cycle, naming the offending concept.
  static Taxonomy from_concepts(std::vector<Concept> concepts);

  bool contains(const std::string& id) const;
  const Concept& concept_at(const std::string& id) const;

  int level_of(const std::string& id) const;
  // Number of concepts at a level; 0 if the level does not exist.
  int nodes_at_level(int level) const;
  // Direct children, sorted by id. Leaves yield an empty vector.
  const std::vector<std::string>& children_of(const std::string& id) const;

  std::size_t size() const { return concepts_.size(); }
  const std::map<std::string, Concept>& concepts() const { return concepts_; }
  const std::map<int, int>& nodes_per_level() const { return nodes_per_level_; }

 private:
  friend Taxonomy merge_synonyms(Taxonomy taxonomy,
                                 const std::vector<std::pair<std::string,
                                                             std::string>>& table);

  std::map<std::string, Concept> concepts_;
  std::map<std::string, std::vector<std::string>> children_;
  std::map<std::string, int> level_;
  std::map<int, int> nodes_per_level_;
};

Taxonomy load_taxonomy(const std::filesystem::path& path);

using SynonymTable = std::vector<std::pair<std::string, std::string>>;

// Two tab-separated columns: concept_id<TAB>label.
SynonymTable load_synonym_table(const std::filesystem::path& path);

// Adds each label to the concept's alt_labels. Idempotent; never touches
// ids, edges or levels. Unknown concept id throws.
Taxonomy merge_synonyms(Taxonomy taxonomy, const SynonymTable& table);

}  // namespace scirec

#endif  // SCIREC_TAXONOMY_HPP_
