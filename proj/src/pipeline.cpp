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

#include "scirec/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "scirec/error.hpp"
#include "scirec/metrics.hpp"
#include "scirec/profiling.hpp"
#include "scirec/ranking.hpp"
#include "scirec/rng.hpp"
#include "scirec/strategy.hpp"
#include "scirec/topic_model.hpp"

namespace scirec {

namespace {

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("digest: cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(buffer.str())));
  return hex;
}

// Everything derived from one corpus view (content mode).
struct CorpusView {
  std::vector<CorpusDocument> docs;
  DocCorpusStats stats;
  std::map<Method, std::map<std::string, ConceptProfile>> profiles;
  std::map<Method, std::vector<Candidate>> candidates;
  TopicModel lda_model;
  bool has_lda = false;
};

void build_candidates(CorpusView& view, Method method) {
  auto& list = view.candidates[method];
  const auto& profiles = view.profiles.at(method);
  list.reserve(view.docs.size());
  for (const auto& doc : view.docs)
    list.push_back({doc.id, &profiles.at(doc.id),
                    TimePoint::doc_year(doc.year)});
}

struct PairStatus {
  std::string user;
  std::string strategy;
  std::string status;  // "served" | "unservable"
  std::string reason;  // empty when served
};

}  // namespace

RunResult run_experiment(const RunConfig& config) {
  {
    const auto problems = validate_run_config(config);
    if (!problems.empty()) {
      std::string what = "run: config is not valid:";
      for (const auto& p : problems) what += "\n  " + p;
      throw Error(what);
    }
  }
  const auto strategies = enumerate_strategies(config.strategy_filter);
  const CivilDate now = parse_civil(config.now_date);
  const long now_days = days_from_civil(now);

  const Stopwords stopwords = load_stopwords(config.stopwords);
  const SuffixRules rules = load_suffix_rules(config.suffix_rules);

  Taxonomy taxonomy = load_taxonomy(config.taxonomy);
  if (!config.synonyms.empty())
    taxonomy = merge_synonyms(std::move(taxonomy),
                              load_synonym_table(config.synonyms));
  const LabelIndex index = build_label_index(taxonomy, stopwords, rules);
  const TextPipeline pipeline{&stopwords, &rules, &index};

  const auto users = load_items(config.tweets, now_days);
  const auto background_by_user = load_items(config.background, now_days);
  std::vector<SocialItem> background_pool;
  for (const auto& [user, items] : background_by_user)
    for (const auto& item : items) background_pool.push_back(item);
  std::sort(background_pool.begin(), background_pool.end(),
            [](const SocialItem& a, const SocialItem& b) { return a.id < b.id; });

  std::set<ContentMode> modes_needed;
  std::set<Method> methods_needed;
  for (const auto& s : strategies) {
    modes_needed.insert(s.content);
    methods_needed.insert(s.profiling);
  }
  const bool lda_needed = methods_needed.count(Method::lda) != 0;
  const bool concepts_needed = methods_needed.count(Method::cfidf) ||
                               methods_needed.count(Method::hcfidf);

  // Sequential preparation phase: corpus views, stats and document profiles.
  std::map<ContentMode, CorpusView> views;
  for (ContentMode mode : modes_needed) {
    CorpusView& view = views[mode];
    view.docs = load_corpus(config.corpus, mode, now.year);
    if (concepts_needed) {
      const auto counted = extract_corpus_counts(view.docs, pipeline);
      view.stats = compute_doc_stats(counted);
      for (Method m : {Method::cfidf, Method::hcfidf}) {
        if (!methods_needed.count(m)) continue;
        auto& profiles = view.profiles[m];
        for (std::size_t i = 0; i < view.docs.size(); ++i) {
          const auto& doc = view.docs[i];
          profiles.emplace(
              doc.id, m == Method::cfidf
                          ? cfidf_doc_weights(counted[i].counts, view.stats,
                                              doc.id)
                          : hcfidf_doc_weights(counted[i].counts, view.stats,
                                               taxonomy, doc.id));
        }
        build_candidates(view, m);
      }
    }
    if (lda_needed) {
      const std::filesystem::path model_path = mode == ContentMode::all
                                                   ? config.lda_model_all
                                                   : config.lda_model_title;
      if (!model_path.empty()) {
        view.lda_model = load_topic_model(model_path);
      } else {
        std::vector<TokenSequence> tokenized;
        tokenized.reserve(view.docs.size());
        for (const auto& doc : view.docs)
          tokenized.push_back(normalize(doc.text(), stopwords, rules));
        const Vocabulary vocab = build_vocabulary(tokenized, config.lda.min_df);
        LdaParams params{config.lda.K, config.lda.alpha, config.lda.beta,
                         config.lda.train_iterations};
        view.lda_model = train_lda(
            tokenized, vocab, params,
            derive_seed(config.seed,
                        "lda-train:" + std::string(to_string(mode))));
      }
      view.has_lda = true;
      view.profiles[Method::lda] = profile_corpus(
          view.docs, view.lda_model, pipeline, config.lda.infer_iterations);
      build_candidates(view, Method::lda);
    }
  }

  // Per-user, per-strategy ranking.
  std::vector<PairStatus> statuses;
  nlohmann::ordered_json recommendations = nlohmann::ordered_json::array();
  int served = 0, unservable = 0;

  for (const auto& [user, items] : users) {
    // Shared per-user state across strategies.
    std::vector<CountedItem> user_counted;
    std::vector<TimePoint> item_times;
    std::vector<TokenSequence> item_tokens;
    for (const auto& item : items) {
      item_tokens.push_back(normalize(item.text, stopwords, rules));
      user_counted.push_back(
          {item.id, extract_concepts(item_tokens.back(), index)});
      item_times.push_back(item.time);
    }

    ItemCorpusStats user_stats;
    std::map<Method, std::vector<std::pair<ProfileFragment, TimePoint>>>
        fragments;
    if (concepts_needed) {
      // Pool items sharing an id with the user's items are excluded before
      // sampling so I_r and I_u stay disjoint.
      std::set<std::string> user_ids;
      for (const auto& item : items) user_ids.insert(item.id);
      std::vector<SocialItem> eligible;
      eligible.reserve(background_pool.size());
      for (const auto& item : background_pool)
        if (!user_ids.count(item.id)) eligible.push_back(item);
      const auto sample =
          sample_background(eligible, items.size(), config.background_factor,
                            derive_seed(config.seed, "bg:" + user));
      std::vector<CountedItem> background_counted;
      background_counted.reserve(sample.size());
      for (const auto& item : sample)
        background_counted.push_back(
            {item.id, count_concepts(item.text, pipeline)});
      user_stats = compute_item_stats(user_counted, background_counted);

      for (Method m : {Method::cfidf, Method::hcfidf}) {
        if (!methods_needed.count(m)) continue;
        auto& frags = fragments[m];
        for (std::size_t i = 0; i < user_counted.size(); ++i) {
          frags.emplace_back(
              m == Method::cfidf
                  ? cfidf_item_weights(user_counted[i].counts, user_stats)
                  : hcfidf_item_weights(user_counted[i].counts, user_stats,
                                        taxonomy),
              item_times[i]);
        }
      }
    }

    // LDA user profile per content mode (the model differs across modes).
    std::map<ContentMode, ConceptProfile> lda_user;
    if (lda_needed) {
      for (ContentMode mode : modes_needed) {
        const auto& model = views.at(mode).lda_model;
        lda_user.emplace(
            mode, user_topic_profile(model, item_tokens, user,
                                     config.lda.infer_iterations,
                                     derive_seed(model.seed,
                                                 "infer-user:" + user)));
      }
    }

    // Concept user profiles per (method, decay).
    std::map<std::pair<Method, DecayKind>, ConceptProfile> concept_user;

    for (const auto& strategy : strategies) {
      DecaySpec spec = DecaySpec::at(strategy.decay, now);
      spec.thresh_social_days = config.decay.thresh_social_days;
      spec.thresh_doc_years = config.decay.thresh_doc_years;
      spec.tau_social_days = config.decay.tau_social_days;
      spec.tau_doc_years = config.decay.tau_doc_years;

      try {
        const ConceptProfile* profile = nullptr;
        if (strategy.profiling == Method::lda) {
          profile = &lda_user.at(strategy.content);
        } else {
          const auto key = std::make_pair(strategy.profiling, strategy.decay);
          auto it = concept_user.find(key);
          if (it == concept_user.end()) {
            it = concept_user
                     .emplace(key,
                              aggregate_user_profile(
                                  fragments.at(strategy.profiling), spec, user))
                     .first;
          }
          profile = &it->second;
        }

        RankedList list =
            rank_top_k(*profile,
                       views.at(strategy.content).candidates.at(
                           strategy.profiling),
                       spec, config.k);
        list.strategy = strategy.id();
        for (const auto& entry : list.entries) {
          nlohmann::ordered_json row;
          row["user"] = user;
          row["strategy"] = list.strategy;
          row["rank"] = entry.rank;
          row["doc_id"] = entry.doc_id;
          row["score"] = entry.score;
          recommendations.push_back(std::move(row));
        }
        statuses.push_back({user, strategy.id(), "served", ""});
        ++served;
      } catch (const UnservableError&) {
        statuses.push_back(
            {user, strategy.id(), "unservable", "empty_user_profile"});
        ++unservable;
      } catch (const Error& e) {
        statuses.push_back({user, strategy.id(), "unservable",
                            std::string("error: ") + e.what()});
        ++unservable;
      }
    }
  }

  std::filesystem::create_directories(config.out_dir);
  RunResult result;
  result.recommendations = config.out_dir / "recommendations.jsonl";
  result.manifest = config.out_dir / "manifest.json";
  result.served = served;
  result.unservable = unservable;

  {
    std::ofstream out(result.recommendations);
    if (!out)
      throw Error("run: cannot write '" + result.recommendations.string() +
                  "'");
    for (const auto& row : recommendations) out << row.dump() << "\n";
  }
  {
    nlohmann::ordered_json manifest;
    manifest["now"] = config.now_date;
    manifest["seed"] = config.seed;
    manifest["k"] = config.k;
    manifest["background_factor"] = config.background_factor;
    manifest["decay"] = {
        {"thresh_social_days", config.decay.thresh_social_days},
        {"thresh_doc_years", config.decay.thresh_doc_years},
        {"tau_social_days", config.decay.tau_social_days},
        {"tau_doc_years", config.decay.tau_doc_years}};
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    for (const auto& s : strategies) ids.push_back(s.id());
    manifest["strategies"] = std::move(ids);
    nlohmann::ordered_json inputs;
    auto add_input = [&](const std::string& name,
                         const std::filesystem::path& p) {
      if (!p.empty())
        inputs[name] = {{"path", p.string()}, {"fnv1a64", file_digest(p)}};
    };
    add_input("taxonomy", config.taxonomy);
    add_input("synonyms", config.synonyms);
    add_input("corpus", config.corpus);
    add_input("tweets", config.tweets);
    add_input("background", config.background);
    add_input("stopwords", config.stopwords);
    add_input("suffix_rules", config.suffix_rules);
    add_input("lda_model_all", config.lda_model_all);
    add_input("lda_model_title", config.lda_model_title);
    manifest["inputs"] = std::move(inputs);
    manifest["n_users"] = users.size();
    manifest["served"] = served;
    manifest["unservable"] = unservable;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& s : statuses) {
      nlohmann::ordered_json p;
      p["user"] = s.user;
      p["strategy"] = s.strategy;
      p["status"] = s.status;
      if (!s.reason.empty()) p["reason"] = s.reason;
      pairs.push_back(std::move(p));
    }
    manifest["pairs"] = std::move(pairs);
    std::ofstream out(result.manifest);
    if (!out)
      throw Error("run: cannot write '" + result.manifest.string() + "'");
    out << manifest.dump(2) << "\n";
  }
  return result;
}

void train_lda_command(const RunConfig& config, ContentMode mode,
                       const std::filesystem::path& out_path) {
  const CivilDate now = parse_civil(config.now_date);
  const Stopwords stopwords = load_stopwords(config.stopwords);
  const SuffixRules rules = load_suffix_rules(config.suffix_rules);
  const auto docs = load_corpus(config.corpus, mode, now.year);
  std::vector<TokenSequence> tokenized;
  tokenized.reserve(docs.size());
  for (const auto& doc : docs)
    tokenized.push_back(normalize(doc.text(), stopwords, rules));
  const Vocabulary vocab = build_vocabulary(tokenized, config.lda.min_df);
  LdaParams params{config.lda.K, config.lda.alpha, config.lda.beta,
                   config.lda.train_iterations};
  const TopicModel model = train_lda(
      tokenized, vocab, params,
      derive_seed(config.seed, "lda-train:" + std::string(to_string(mode))));
  save_topic_model(model, out_path);
}

void evaluate_command(const std::filesystem::path& recommendations,
                      const std::filesystem::path& judgments,
                      const std::filesystem::path& out_metrics_csv,
                      const std::filesystem::path& out_per_user_csv) {
  std::ifstream in(recommendations);
  if (!in)
    throw Error("evaluate: cannot open '" + recommendations.string() + "'");
  // (user, strategy, rank) -> doc_id
  std::map<std::tuple<std::string, std::string, int>, std::string> recs;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw Error("evaluate: malformed recommendation line " +
                  std::to_string(lineno));
    recs.emplace(std::make_tuple(j.at("user").get<std::string>(),
                                 j.at("strategy").get<std::string>(),
                                 j.at("rank").get<int>()),
                 j.at("doc_id").get<std::string>());
  }

  const auto judged = load_judgments(judgments);
  if (judged.empty())
    throw Error("evaluate: no judgments in '" + judgments.string() + "'");
  for (const auto& j : judged) {
    auto it = recs.find({j.user, j.strategy, j.rank});
    if (it == recs.end() || it->second != j.doc_id)
      throw Error("evaluate: judgment (" + j.user + ", " + j.strategy +
                  ", rank " + std::to_string(j.rank) +
                  ") does not match any recommendation");
  }

  write_per_user_csv(per_user_metrics(judged), out_per_user_csv);
  write_metrics_csv(aggregate(judged, all_metric_names()), out_metrics_csv);
}

}  // namespace scirec
