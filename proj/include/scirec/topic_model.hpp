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

#ifndef SCIREC_TOPIC_MODEL_HPP_
#define SCIREC_TOPIC_MODEL_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "scirec/profile.hpp"
#include "scirec/rng.hpp"
#include "scirec/text.hpp"

namespace scirec {

struct Vocabulary {
  std::vector<std::string> terms;  // sorted lexicographically
  std::unordered_map<std::string, int> index;
  long min_df = 0;

  int id_of(const std::string& term) const {
    auto it = index.find(term);
    return it == index.end() ? -1 : it->second;
  }
  std::size_t size() const { return terms.size(); }
};

// Terms with document frequency >= min_df. Throws when nothing survives.
Vocabulary build_vocabulary(const std::vector<TokenSequence>& corpus,
                            long min_df = 25);

struct TopicModel {
  int K = 0;
  double alpha = 0.5;
  double beta = 0.1;
  std::vector<std::vector<long>> topic_word_counts;  // K x V
  std::vector<long> topic_totals;                    // K
  Vocabulary vocabulary;
  std::uint64_t seed = 0;
};

using TopicDistribution = std::vector<double>;

// Collapsed Gibbs sampler, sequential by construction so a fixed seed gives
// bit-identical counts. Exposed so tests can drive sweeps one at a time.
class GibbsSampler {
 public:
  GibbsSampler(std::vector<std::vector<int>> docs, int K, int V, double alpha,
               double beta, std::uint64_t seed);

  void initialize();  // uniform random topic per token
  void sweep();       // one full pass over all tokens

  // Sum over tokens of ln((n_kw + beta) / (n_k + V*beta)) under the current
  // assignments.
  double log_likelihood() const;

  long total_tokens() const { return total_tokens_; }
  const std::vector<long>& topic_totals() const { return topic_totals_; }
  const std::vector<std::vector<long>>& topic_word_counts() const {
    return topic_word_counts_;
  }
  const std::vector<std::vector<long>>& doc_topic_counts() const {
    return doc_topic_counts_;
  }

 private:
  int sample_topic(int doc, int word);

  std::vector<std::vector<int>> docs_;
  int K_;
  int V_;
  double alpha_;
  double beta_;
  std::vector<std::vector<long>> topic_word_counts_;
  std::vector<long> topic_totals_;
  std::vector<std::vector<long>> doc_topic_counts_;
  std::vector<std::vector<int>> assignments_;
  long total_tokens_ = 0;
  Rng rng_;
  std::vector<double> weight_buf_;
};

struct LdaParams {
  int K = 100;
  double alpha = 0.5;
  double beta = 0.1;
  int iterations = 500;
};

TopicModel train_lda(const std::vector<TokenSequence>& corpus,
                     const Vocabulary& vocabulary, const LdaParams& params,
                     std::uint64_t seed);

// Gibbs inference holding topic_word_counts fixed; returns
// theta_k = (n_k + alpha) / (N + K*alpha) from the final assignments.
// All-OOV input yields the uniform distribution.
TopicDistribution infer(const TopicModel& model, const TokenSequence& tokens,
                        int iterations, std::uint64_t seed);

// Concatenates the items' tokens (callers pass them in timestamp order)
// and infers one distribution for the whole stream.
ConceptProfile user_topic_profile(const TopicModel& model,
                                  const std::vector<TokenSequence>& user_items,
                                  std::string subject, int iterations,
                                  std::uint64_t seed);

ConceptProfile topic_profile(const TopicModel& model,
                             const TopicDistribution& dist,
                             std::string subject);

// Corpus likelihood under the model: per document, assignments are drawn by
// fixed-topic Gibbs inference (seeded from the model seed), then token
// log-probabilities are summed.
double log_likelihood(const TopicModel& model,
                      const std::vector<TokenSequence>& corpus,
                      int iterations = 200);

void save_topic_model(const TopicModel& model,
                      const std::filesystem::path& path);
TopicModel load_topic_model(const std::filesystem::path& path);

}  // namespace scirec

#endif  // SCIREC_TOPIC_MODEL_HPP_
