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

#ifndef SCIREC_CORPUS_HPP_
#define SCIREC_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scirec/profile.hpp"
#include "scirec/profiling.hpp"
#include "scirec/taxonomy.hpp"
#include "scirec/temporal.hpp"
#include "scirec/text.hpp"
#include "scirec/topic_model.hpp"

namespace scirec {

enum class ContentMode { all, title };

std::string_view to_string(ContentMode m);
ContentMode parse_content(std::string_view s);

struct CorpusDocument {
  std::string id;
  std::string title;
  std::optional<std::string> fulltext;  // absent in TITLE mode
  int year = 0;

  // Title plus full text under ALL mode; title only otherwise.
  std::string text() const;
};

struct SocialItem {
  std::string id;
  std::string user;
  std::string text;
  TimePoint time;  // item_days
};

struct LoadReport {
  std::vector<std::string> warnings;
};

// JSONL, one document per line: {"id", "title", "fulltext"?, "year"}.
// TITLE mode discards fulltext before anything downstream can see it.
// All malformed lines are collected and reported in a single error.
std::vector<CorpusDocument> load_corpus(const std::filesystem::path& path,
                                        ContentMode mode, int max_year,
                                        LoadReport* report = nullptr);

// JSONL: {"id", "user", "text", "date": "YYYY-MM-DD" | "days": int}.
// Items are grouped per user and sorted by time then id.
std::map<std::string, std::vector<SocialItem>> load_items(
    const std::filesystem::path& path, long now_days,
    LoadReport* report = nullptr);

// Everything needed to turn raw text into concept counts.
struct TextPipeline {
  const Stopwords* stopwords = nullptr;
  const SuffixRules* rules = nullptr;
  const LabelIndex* index = nullptr;
};

ConceptCounts count_concepts(std::string_view text,
                             const TextPipeline& pipeline);

std::vector<CountedItem> extract_corpus_counts(
    const std::vector<CorpusDocument>& corpus, const TextPipeline& pipeline);

// Concept-method document profiles. stats must come from the same corpus
// and content mode. Documents with empty profiles are retained.
std::map<std::string, ConceptProfile> profile_corpus(
    const std::vector<CorpusDocument>& corpus, Method method,
    const TextPipeline& pipeline, const Taxonomy& taxonomy,
    const DocCorpusStats& stats);

// LDA document profiles via fixed-topic inference.
std::map<std::string, ConceptProfile> profile_corpus(
    const std::vector<CorpusDocument>& corpus, const TopicModel& model,
    const TextPipeline& pipeline, int infer_iterations);

void dump_profiles_jsonl(const std::map<std::string, ConceptProfile>& profiles,
                         const std::filesystem::path& path);

}  // namespace scirec

#endif  // SCIREC_CORPUS_HPP_
