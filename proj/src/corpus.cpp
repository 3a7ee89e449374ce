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

#include "scirec/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "scirec/error.hpp"
#include "scirec/rng.hpp"

namespace scirec {

std::string_view to_string(ContentMode m) {
  switch (m) {
    case ContentMode::all: return "ALL";
    case ContentMode::title: return "TITLE";
  }
  throw Error("unreachable content mode");
}

ContentMode parse_content(std::string_view s) {
  if (s == "ALL") return ContentMode::all;
  if (s == "TITLE") return ContentMode::title;
  throw Error("unknown content mode '" + std::string(s) + "'");
}

std::string CorpusDocument::text() const {
  if (!fulltext) return title;
  return title + "\n" + *fulltext;
}

std::vector<CorpusDocument> load_corpus(const std::filesystem::path& path,
                                        ContentMode mode, int max_year,
                                        LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw Error("corpus: cannot open '" + path.string() + "'");

  std::vector<CorpusDocument> docs;
  std::set<std::string> seen;
  std::vector<std::string> errors;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) {
      errors.push_back("line " + std::to_string(lineno) + ": " + what);
    };
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      fail("malformed JSON");
      continue;
    }
    CorpusDocument doc;
    doc.id = j.value("id", "");
    doc.title = j.value("title", "");
    if (doc.id.empty()) {
      fail("missing id");
      continue;
    }
    if (doc.title.empty()) {
      fail("missing title for doc '" + doc.id + "'");
      continue;
    }
    if (!j.contains("year") || !j["year"].is_number_integer()) {
      fail("missing year for doc '" + doc.id + "'");
      continue;
    }
    doc.year = j["year"].get<int>();
    if (doc.year < 1800 || doc.year > max_year) {
      fail("implausible year " + std::to_string(doc.year) + " for doc '" +
           doc.id + "'");
      continue;
    }
    if (mode == ContentMode::all && j.contains("fulltext") &&
        j["fulltext"].is_string())
      doc.fulltext = j["fulltext"].get<std::string>();
    if (!seen.insert(doc.id).second) {
      fail("duplicate doc id '" + doc.id + "'");
      continue;
    }
    docs.push_back(std::move(doc));
  }
  if (!errors.empty()) {
    std::string what = "corpus: " + std::to_string(errors.size()) +
                       " invalid line(s) in '" + path.string() + "':";
    for (const auto& e : errors) what += "\n  " + e;
    throw Error(what);
  }
  if (docs.empty() && report)
    report->warnings.push_back("corpus file '" + path.string() + "' is empty");
  return docs;
}

std::map<std::string, std::vector<SocialItem>> load_items(
    const std::filesystem::path& path, long now_days, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw Error("items: cannot open '" + path.string() + "'");

  std::map<std::string, std::vector<SocialItem>> by_user;
  std::set<std::string> seen;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw Error("items: malformed JSON on line " + std::to_string(lineno));
    SocialItem item;
    item.id = j.value("id", "");
    item.user = j.value("user", "");
    item.text = j.value("text", "");
    if (item.id.empty() || item.user.empty())
      throw Error("items: missing id or user on line " +
                  std::to_string(lineno));
    if (j.contains("days") && j["days"].is_number_integer()) {
      item.time = TimePoint::item_days(j["days"].get<long>());
    } else if (j.contains("date") && j["date"].is_string()) {
      try {
        item.time = TimePoint::item_days(
            days_from_civil(parse_civil(j["date"].get<std::string>())));
      } catch (const Error& e) {
        throw Error("items: line " + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      throw Error("items: missing date/days on line " +
                  std::to_string(lineno));
    }
    if (item.time.value > now_days)
      throw Error("items: item '" + item.id +
                  "' is timestamped after 'now' (line " +
                  std::to_string(lineno) + ")");
    if (!seen.insert(item.id).second)
      throw Error("items: duplicate item id '" + item.id + "' (line " +
                  std::to_string(lineno) + ")");
    by_user[item.user].push_back(std::move(item));
  }
  for (auto& [user, items] : by_user) {
    std::sort(items.begin(), items.end(),
              [](const SocialItem& a, const SocialItem& b) {
                if (a.time.value != b.time.value)
                  return a.time.value < b.time.value;
                return a.id < b.id;
              });
  }
  if (by_user.empty() && report)
    report->warnings.push_back("items file '" + path.string() + "' is empty");
  return by_user;
}

ConceptCounts count_concepts(std::string_view text,
                             const TextPipeline& pipeline) {
  const TokenSequence tokens =
      normalize(text, *pipeline.stopwords, *pipeline.rules);
  return extract_concepts(tokens, *pipeline.index);
}

std::vector<CountedItem> extract_corpus_counts(
    const std::vector<CorpusDocument>& corpus, const TextPipeline& pipeline) {
  std::vector<CountedItem> counted;
  counted.reserve(corpus.size());
  for (const auto& doc : corpus)
    counted.push_back({doc.id, count_concepts(doc.text(), pipeline)});
  return counted;
}

std::map<std::string, ConceptProfile> profile_corpus(
    const std::vector<CorpusDocument>& corpus, Method method,
    const TextPipeline& pipeline, const Taxonomy& taxonomy,
    const DocCorpusStats& stats) {
  if (method == Method::lda)
    throw Error("profile_corpus: pass the topic model for LDA");
  std::map<std::string, ConceptProfile> profiles;
  for (const auto& doc : corpus) {
    const ConceptCounts counts = count_concepts(doc.text(), pipeline);
    profiles.emplace(doc.id,
                     method == Method::cfidf
                         ? cfidf_doc_weights(counts, stats, doc.id)
                         : hcfidf_doc_weights(counts, stats, taxonomy, doc.id));
  }
  return profiles;
}

std::map<std::string, ConceptProfile> profile_corpus(
    const std::vector<CorpusDocument>& corpus, const TopicModel& model,
    const TextPipeline& pipeline, int infer_iterations) {
  std::map<std::string, ConceptProfile> profiles;
  for (const auto& doc : corpus) {
    const TokenSequence tokens =
        normalize(doc.text(), *pipeline.stopwords, *pipeline.rules);
    const TopicDistribution dist =
        infer(model, tokens, infer_iterations,
              derive_seed(model.seed, "infer-doc:" + doc.id));
    profiles.emplace(doc.id, topic_profile(model, dist, doc.id));
  }
  return profiles;
}

void dump_profiles_jsonl(const std::map<std::string, ConceptProfile>& profiles,
                         const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("profiles: cannot write '" + path.string() + "'");
  for (const auto& [id, profile] : profiles) {
    nlohmann::ordered_json j;
    j["subject"] = profile.subject;
    j["method"] = std::string(to_string(profile.method));
    nlohmann::ordered_json weights = nlohmann::ordered_json::object();
    for (const auto& [cid, w] : profile.weights) weights[cid] = w;
    j["weights"] = std::move(weights);
    out << j.dump() << "\n";
  }
}

}  // namespace scirec
