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

#include "scirec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "scirec/error.hpp"

namespace scirec {

namespace {

void check_length(const std::vector<bool>& relevance, int k) {
  if (static_cast<int>(relevance.size()) > k)
    throw Error("metrics: relevance list longer than k");
}

double half_life_weight(int rank, double theta) {
  return std::pow(2.0, -(static_cast<double>(rank) - 1.0) / (theta - 1.0));
}

}  // namespace

double rankscore(const std::vector<bool>& relevance, int k, double theta) {
  if (theta <= 1.0) throw Error("rankscore: theta must be > 1");
  if (k < 1) throw Error("rankscore: k must be >= 1");
  check_length(relevance, k);
  double raw = 0.0;
  for (std::size_t i = 0; i < relevance.size(); ++i)
    if (relevance[i]) raw += half_life_weight(static_cast<int>(i) + 1, theta);
  double max = 0.0;
  for (int j = 1; j <= k; ++j) max += half_life_weight(j, theta);
  return raw / max;
}

double precision_at_k(const std::vector<bool>& relevance, int k) {
  if (k < 1) throw Error("precision: k must be >= 1");
  check_length(relevance, k);
  long hits = std::count(relevance.begin(), relevance.end(), true);
  return static_cast<double>(hits) / static_cast<double>(k);
}

double average_precision(const std::vector<bool>& relevance) {
  long hits = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < relevance.size(); ++i) {
    if (relevance[i]) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return hits == 0 ? 0.0 : sum / static_cast<double>(hits);
}

double reciprocal_rank(const std::vector<bool>& relevance) {
  for (std::size_t i = 0; i < relevance.size(); ++i)
    if (relevance[i]) return 1.0 / static_cast<double>(i + 1);
  return 0.0;
}

double ndcg(const std::vector<bool>& relevance, int k) {
  if (k < 1) throw Error("ndcg: k must be >= 1");
  check_length(relevance, k);
  double dcg = 0.0;
  long hits = 0;
  for (std::size_t i = 0; i < relevance.size(); ++i) {
    if (relevance[i]) {
      dcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
      ++hits;
    }
  }
  if (hits == 0) return 0.0;
  double idcg = 0.0;
  for (long i = 0; i < hits; ++i)
    idcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
  return dcg / idcg;
}

const std::vector<std::string>& all_metric_names() {
  static const std::vector<std::string> names = {
      "rankscore", "precision", "average_precision", "reciprocal_rank",
      "ndcg"};
  return names;
}

std::vector<PerUserMetrics> per_user_metrics(
    const std::vector<Judgment>& judgments, double theta) {
  std::map<std::pair<std::string, std::string>, std::map<int, bool>> groups;
  for (const auto& j : judgments) {
    auto& group = groups[{j.user, j.strategy}];
    if (!group.emplace(j.rank, j.relevant).second)
      throw Error("judgments: duplicate (" + j.user + ", " + j.strategy +
                  ", rank " + std::to_string(j.rank) + ")");
  }
  std::vector<PerUserMetrics> out;
  for (const auto& [key, group] : groups) {
    const int k = static_cast<int>(group.size());
    std::vector<bool> relevance(k, false);
    for (const auto& [rank, relevant] : group) {
      if (rank < 1 || rank > k)
        throw Error("judgments: ranks for (" + key.first + ", " + key.second +
                    ") are not gap-free 1..k; offending rank " +
                    std::to_string(rank));
      relevance[rank - 1] = relevant;
    }
    PerUserMetrics m;
    m.user = key.first;
    m.strategy = key.second;
    m.k = k;
    m.values = {rankscore(relevance, k, theta), precision_at_k(relevance, k),
                average_precision(relevance), reciprocal_rank(relevance),
                ndcg(relevance, k)};
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<MetricRow> aggregate(const std::vector<Judgment>& judgments,
                                 const std::vector<std::string>& metric_names,
                                 double theta) {
  const auto& names = all_metric_names();
  for (const auto& name : metric_names) {
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw Error("metrics: unknown metric '" + name + "'");
  }
  const auto per_user = per_user_metrics(judgments, theta);

  std::map<std::string, std::vector<const PerUserMetrics*>> by_strategy;
  for (const auto& m : per_user) by_strategy[m.strategy].push_back(&m);

  std::vector<MetricRow> rows;
  for (const auto& [strategy, users] : by_strategy) {
    for (const auto& name : metric_names) {
      const auto idx = static_cast<std::size_t>(
          std::find(names.begin(), names.end(), name) - names.begin());
      const auto n = static_cast<double>(users.size());
      double mean = 0.0;
      for (const auto* u : users) mean += u->values[idx];
      mean /= n;
      double var = 0.0;
      for (const auto* u : users) {
        const double d = u->values[idx] - mean;
        var += d * d;
      }
      var /= n;
      rows.push_back({strategy, name, mean, std::sqrt(var),
                      static_cast<int>(users.size())});
    }
  }
  return rows;
}

std::vector<Judgment> load_judgments(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("judgments: cannot open '" + path.string() + "'");
  std::vector<Judgment> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == "user,strategy,doc_id,rank,relevant") continue;
    std::stringstream ss(line);
    Judgment j;
    std::string rank, relevant;
    if (!std::getline(ss, j.user, ',') || !std::getline(ss, j.strategy, ',') ||
        !std::getline(ss, j.doc_id, ',') || !std::getline(ss, rank, ',') ||
        !std::getline(ss, relevant))
      throw Error("judgments: malformed line " + std::to_string(lineno));
    try {
      j.rank = std::stoi(rank);
    } catch (const std::exception&) {
      throw Error("judgments: bad rank on line " + std::to_string(lineno));
    }
    if (relevant == "1")
      j.relevant = true;
    else if (relevant == "0")
      j.relevant = false;
    else
      throw Error("judgments: relevant must be 0 or 1 on line " +
                  std::to_string(lineno));
    out.push_back(std::move(j));
  }
  return out;
}

void write_metrics_csv(const std::vector<MetricRow>& rows,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("metrics: cannot write '" + path.string() + "'");
  out << "strategy,metric,mean,sd,n_users\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f", row.mean, row.sd);
    out << row.strategy << ',' << row.metric << ',' << buf << ','
        << row.n_users << '\n';
  }
}

void write_per_user_csv(const std::vector<PerUserMetrics>& rows,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("metrics: cannot write '" + path.string() + "'");
  out << "user,strategy,metric,value\n";
  char buf[32];
  for (const auto& row : rows) {
    const auto& names = all_metric_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.6f", row.values[i]);
      out << row.user << ',' << row.strategy << ',' << names[i] << ',' << buf
          << '\n';
    }
  }
}

}  // namespace scirec
