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

#include "scirec/topic_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "scirec/error.hpp"
#include "scirec/rng.hpp"

namespace scirec {

Vocabulary build_vocabulary(const std::vector<TokenSequence>& corpus,
                            long min_df) {
  std::map<std::string, long> df;
  for (const auto& doc : corpus) {
    std::set<std::string> seen(doc.begin(), doc.end());
    for (const auto& term : seen) df[term] += 1;
  }
  Vocabulary vocab;
  vocab.min_df = min_df;
  for (const auto& [term, freq] : df) {
    if (freq >= min_df) vocab.terms.push_back(term);  // map order = sorted
  }
  if (vocab.terms.empty())
    throw Error("vocabulary: no term reaches min_df=" +
                std::to_string(min_df) +
                "; lower min_df for small corpora");
  for (std::size_t i = 0; i < vocab.terms.size(); ++i)
    vocab.index.emplace(vocab.terms[i], static_cast<int>(i));
  return vocab;
}

GibbsSampler::GibbsSampler(std::vector<std::vector<int>> docs, int K, int V,
                           double alpha, double beta, std::uint64_t seed)
    : docs_(std::move(docs)),
      K_(K),
      V_(V),
      alpha_(alpha),
      beta_(beta),
      topic_word_counts_(K, std::vector<long>(V, 0)),
      topic_totals_(K, 0),
      rng_(seed),
      weight_buf_(K, 0.0) {
  if (K_ < 1) throw Error("lda: K must be >= 1");
  doc_topic_counts_.assign(docs_.size(), std::vector<long>(K_, 0));
  assignments_.resize(docs_.size());
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    assignments_[d].assign(docs_[d].size(), 0);
    total_tokens_ += static_cast<long>(docs_[d].size());
  }
}

void GibbsSampler::initialize() {
  for (auto& row : topic_word_counts_) std::fill(row.begin(), row.end(), 0L);
  std::fill(topic_totals_.begin(), topic_totals_.end(), 0L);
  for (auto& row : doc_topic_counts_) std::fill(row.begin(), row.end(), 0L);
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    for (std::size_t pos = 0; pos < docs_[d].size(); ++pos) {
      const int k = static_cast<int>(uniform_below(rng_, K_));
      assignments_[d][pos] = k;
      topic_word_counts_[k][docs_[d][pos]] += 1;
      topic_totals_[k] += 1;
      doc_topic_counts_[d][k] += 1;
    }
  }
}

int GibbsSampler::sample_topic(int doc, int word) {
  const double vbeta = static_cast<double>(V_) * beta_;
  double total = 0.0;
  for (int k = 0; k < K_; ++k) {
    const double w = (doc_topic_counts_[doc][k] + alpha_) *
                     (topic_word_counts_[k][word] + beta_) /
                     (topic_totals_[k] + vbeta);
    total += w;
    weight_buf_[k] = total;  // cumulative
  }
  const double target = uniform_unit(rng_) * total;
  for (int k = 0; k < K_; ++k) {
    if (target < weight_buf_[k]) return k;
  }
  return K_ - 1;
}

void GibbsSampler::sweep() {
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    for (std::size_t pos = 0; pos < docs_[d].size(); ++pos) {
      const int w = docs_[d][pos];
      const int old_k = assignments_[d][pos];
      topic_word_counts_[old_k][w] -= 1;
      topic_totals_[old_k] -= 1;
      doc_topic_counts_[d][old_k] -= 1;

      const int k = sample_topic(static_cast<int>(d), w);
      assignments_[d][pos] = k;
      topic_word_counts_[k][w] += 1;
      topic_totals_[k] += 1;
      doc_topic_counts_[d][k] += 1;
    }
  }
}

double GibbsSampler::log_likelihood() const {
  const double vbeta = static_cast<double>(V_) * beta_;
  double ll = 0.0;
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    for (std::size_t pos = 0; pos < docs_[d].size(); ++pos) {
      const int w = docs_[d][pos];
      const int k = assignments_[d][pos];
      ll += std::log((topic_word_counts_[k][w] + beta_) /
                     (topic_totals_[k] + vbeta));
    }
  }
  return ll;
}

namespace {

std::vector<int> to_ids(const TokenSequence& tokens, const Vocabulary& vocab) {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) {
    const int id = vocab.id_of(t);
    if (id >= 0) ids.push_back(id);  // OOV dropped
  }
  return ids;
}

std::vector<std::vector<int>> corpus_to_ids(
    const std::vector<TokenSequence>& corpus, const Vocabulary& vocab) {
  std::vector<std::vector<int>> docs;
  docs.reserve(corpus.size());
  for (const auto& tokens : corpus) docs.push_back(to_ids(tokens, vocab));
  return docs;
}

struct FixedTopicResult {
  std::vector<int> z;
  std::vector<long> n_k;
};

// Gibbs sampling for one document with the model's topics held fixed.
FixedTopicResult fixed_topic_gibbs(const TopicModel& model,
                                   const std::vector<int>& ids, int iterations,
                                   std::uint64_t seed) {
  const int K = model.K;
  FixedTopicResult res;
  res.z.assign(ids.size(), 0);
  res.n_k.assign(K, 0);
  if (ids.empty()) return res;

  const double vbeta =
      static_cast<double>(model.vocabulary.size()) * model.beta;
  Rng rng(seed);
  for (std::size_t pos = 0; pos < ids.size(); ++pos) {
    const int k = static_cast<int>(uniform_below(rng, K));
    res.z[pos] = k;
    res.n_k[k] += 1;
  }
  std::vector<double> cumulative(K, 0.0);
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t pos = 0; pos < ids.size(); ++pos) {
      const int w = ids[pos];
      res.n_k[res.z[pos]] -= 1;
      double total = 0.0;
      for (int k = 0; k < K; ++k) {
        total += (res.n_k[k] + model.alpha) *
                 (model.topic_word_counts[k][w] + model.beta) /
                 (model.topic_totals[k] + vbeta);
        cumulative[k] = total;
      }
      const double target = uniform_unit(rng) * total;
      int k = K - 1;
      for (int j = 0; j < K; ++j) {
        if (target < cumulative[j]) {
          k = j;
          break;
        }
      }
      res.z[pos] = k;
      res.n_k[k] += 1;
    }
  }
  return res;
}

}  // namespace

TopicModel train_lda(const std::vector<TokenSequence>& corpus,
                     const Vocabulary& vocabulary, const LdaParams& params,
                     std::uint64_t seed) {
  if (params.K < 1) throw Error("lda: K must be >= 1");
  if (corpus.empty()) throw Error("lda: empty corpus");
  if (vocabulary.size() == 0) throw Error("lda: empty vocabulary");

  GibbsSampler sampler(corpus_to_ids(corpus, vocabulary), params.K,
                       static_cast<int>(vocabulary.size()), params.alpha,
                       params.beta, seed);
  sampler.initialize();
  for (int it = 0; it < params.iterations; ++it) sampler.sweep();

  TopicModel model;
  model.K = params.K;
  model.alpha = params.alpha;
  model.beta = params.beta;
  model.topic_word_counts = sampler.topic_word_counts();
  model.topic_totals = sampler.topic_totals();
  model.vocabulary = vocabulary;
  model.seed = seed;
  return model;
}

TopicDistribution infer(const TopicModel& model, const TokenSequence& tokens,
                        int iterations, std::uint64_t seed) {
  if (model.K < 1) throw Error("lda: model has no topics");
  const std::vector<int> ids = to_ids(tokens, model.vocabulary);
  const FixedTopicResult res = fixed_topic_gibbs(model, ids, iterations, seed);
  const double denom =
      static_cast<double>(ids.size()) + model.K * model.alpha;
  TopicDistribution theta(model.K, 0.0);
  for (int k = 0; k < model.K; ++k)
    theta[k] = (res.n_k[k] + model.alpha) / denom;
  return theta;
}

ConceptProfile topic_profile(const TopicModel& model,
                             const TopicDistribution& dist,
                             std::string subject) {
  ConceptProfile profile;
  profile.method = Method::lda;
  profile.subject = std::move(subject);
  for (int k = 0; k < model.K; ++k) {
    if (dist[k] > 0.0)
      profile.weights.emplace("t" + std::to_string(k), dist[k]);
  }
  return profile;
}

ConceptProfile user_topic_profile(const TopicModel& model,
                                  const std::vector<TokenSequence>& user_items,
                                  std::string subject, int iterations,
                                  std::uint64_t seed) {
  TokenSequence combined;
  for (const auto& item : user_items)
    combined.insert(combined.end(), item.begin(), item.end());
  const TopicDistribution dist = infer(model, combined, iterations, seed);
  return topic_profile(model, dist, std::move(subject));
}

double log_likelihood(const TopicModel& model,
                      const std::vector<TokenSequence>& corpus,
                      int iterations) {
  const double vbeta =
      static_cast<double>(model.vocabulary.size()) * model.beta;
  double ll = 0.0;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    const std::vector<int> ids = to_ids(corpus[d], model.vocabulary);
    if (ids.empty()) continue;
    const std::uint64_t doc_seed =
        derive_seed(model.seed, "loglik:" + std::to_string(d));
    const FixedTopicResult res =
        fixed_topic_gibbs(model, ids, iterations, doc_seed);
    for (std::size_t pos = 0; pos < ids.size(); ++pos) {
      ll += std::log(
          (model.topic_word_counts[res.z[pos]][ids[pos]] + model.beta) /
          (model.topic_totals[res.z[pos]] + vbeta));
    }
  }
  return ll;
}

void save_topic_model(const TopicModel& model,
                      const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["K"] = model.K;
  j["alpha"] = model.alpha;
  j["beta"] = model.beta;
  j["seed"] = model.seed;
  j["min_df"] = model.vocabulary.min_df;
  j["terms"] = model.vocabulary.terms;
  j["topic_totals"] = model.topic_totals;
  j["topic_word_counts"] = model.topic_word_counts;
  std::ofstream out(path);
  if (!out) throw Error("model: cannot write '" + path.string() + "'");
  out << j.dump() << "\n";
}

TopicModel load_topic_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("model: cannot open '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("model: parse error in '" + path.string() + "': " + e.what());
  }
  TopicModel model;
  model.K = j.at("K").get<int>();
  model.alpha = j.at("alpha").get<double>();
  model.beta = j.at("beta").get<double>();
  model.seed = j.at("seed").get<std::uint64_t>();
  model.vocabulary.min_df = j.at("min_df").get<long>();
  model.vocabulary.terms = j.at("terms").get<std::vector<std::string>>();
  for (std::size_t i = 0; i < model.vocabulary.terms.size(); ++i)
    model.vocabulary.index.emplace(model.vocabulary.terms[i],
                                   static_cast<int>(i));
  model.topic_totals = j.at("topic_totals").get<std::vector<long>>();
  model.topic_word_counts =
      j.at("topic_word_counts").get<std::vector<std::vector<long>>>();
  if (static_cast<int>(model.topic_word_counts.size()) != model.K ||
      static_cast<int>(model.topic_totals.size()) != model.K)
    throw Error("model: count matrix shape does not match K");
  return model;
}

}  // namespace scirec
