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

#ifndef SCIREC_METRICS_HPP_
#define SCIREC_METRICS_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace scirec {

// relevance[i] is the judgment of the item at rank i+1. All metrics ignore
// anything beyond rank k and return values in [0, 1].

// Half-life discounted utility, normalized by the perfect list:
//   raw = sum over relevant ranks r of 2^(-(r-1)/(theta-1))
//   max = sum over j = 1..k of 2^(-(j-1)/(theta-1))
double rankscore(const std::vector<bool>& relevance, int k, double theta = 5.0);

// (# relevant in the top k) / k; a missing tail counts as irrelevant.
double precision_at_k(const std::vector<bool>& relevance, int k);

// Mean of precision-at-rank over the relevant ranks; 0 with no hits.
double average_precision(const std::vector<bool>& relevance);

// 1 / rank of the first relevant item; 0 with no hits.
double reciprocal_rank(const std::vector<bool>& relevance);

// Binary-gain DCG with the log2(i+1) discount, normalized by the ideal
// ordering; 0 with no hits.
double ndcg(const std::vector<bool>& relevance, int k);

struct Judgment {
  std::string user;
  std::string strategy;
  std::string doc_id;
  int rank = 0;  // 1-based, gap-free within (user, strategy)
  bool relevant = false;
};

struct MetricRow {
  std::string strategy;
  std::string metric;
  double mean = 0.0;
  double sd = 0.0;  // population SD
  int n_users = 0;
};

// Canonical metric order used throughout.
const std::vector<std::string>& all_metric_names();

struct PerUserMetrics {
  std::string user;
  std::string strategy;
  int k = 0;
  std::vector<double> values;  // aligned with all_metric_names()
};

// Validates judgment integrity (unique (user, strategy, rank), gap-free
// ranks) and computes every metric per (user, strategy) with k = the list
// length.
std::vector<PerUserMetrics> per_user_metrics(
    const std::vector<Judgment>& judgments, double theta = 5.0);

// Per (strategy, metric): mean and population SD over users, sorted by
// strategy then metric.
std::vector<MetricRow> aggregate(const std::vector<Judgment>& judgments,
                                 const std::vector<std::string>& metric_names,
                                 double theta = 5.0);

// CSV header: user,strategy,doc_id,rank,relevant with relevant in {0,1}.
std::vector<Judgment> load_judgments(const std::filesystem::path& path);

void write_metrics_csv(const std::vector<MetricRow>& rows,
                       const std::filesystem::path& path);
void write_per_user_csv(const std::vector<PerUserMetrics>& rows,
                        const std::filesystem::path& path);

}  // namespace scirec

#endif  // SCIREC_METRICS_HPP_
