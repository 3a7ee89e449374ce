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

#include "scirec/ranking.hpp"

#include <algorithm>
#include <cmath>

#include "scirec/error.hpp"

namespace scirec {

namespace {

double sparse_dot(const WeightMap& a, const WeightMap& b) {
  const WeightMap& small = a.size() <= b.size() ? a : b;
  const WeightMap& large = a.size() <= b.size() ? b : a;
  double sum = 0.0;
  for (const auto& [id, w] : small) {
    auto it = large.find(id);
    if (it != large.end()) sum += w * it->second;
  }
  return sum;
}

double norm(const WeightMap& a) {
  double sum = 0.0;
  for (const auto& [id, w] : a) sum += w * w;
  return std::sqrt(sum);
}

void check_factor(double factor) {
  if (!(factor >= 0.0 && factor <= 1.0))
    throw Error("similarity: decay factor must lie in [0, 1]");
}

}  // namespace

double cosine(const ConceptProfile& u, const ConceptProfile& d) {
  if (u.method != d.method)
    throw Error("similarity: cannot compare " + std::string(to_string(u.method)) +
                " and " + std::string(to_string(d.method)) + " profiles");
  if (u.weights.empty() || d.weights.empty()) return 0.0;
  const double nu = norm(u.weights);
  const double nd = norm(d.weights);
  if (nu == 0.0 || nd == 0.0) return 0.0;
  return sparse_dot(u.weights, d.weights) / (nu * nd);
}

double temporal_cosine(const ConceptProfile& u, const ConceptProfile& d,
                       double factor) {
  check_factor(factor);
  return factor * cosine(u, d);
}

double dot(const ConceptProfile& u, const ConceptProfile& d, double factor) {
  if (u.method != Method::lda || d.method != Method::lda)
    throw Error("similarity: dot product is defined for LDA profiles only");
  check_factor(factor);
  return factor * sparse_dot(u.weights, d.weights);
}

RankedList rank_top_k(const ConceptProfile& user,
                      const std::vector<Candidate>& candidates,
                      const DecaySpec& spec, int k) {
  if (k < 1) throw Error("ranking: k must be >= 1");
  if (user.weights.empty())
    throw UnservableError("ranking: empty user profile for subject '" +
                          user.subject + "'");

  std::vector<RankedEntry> scored;
  scored.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    const DocumentDecay decay = decay_document(candidate.published, spec);
    if (!decay.kept) continue;
    const double score =
        user.method == Method::lda
            ? dot(user, *candidate.profile, decay.factor)
            : temporal_cosine(user, *candidate.profile, decay.factor);
    scored.push_back({0, candidate.doc_id, score});
  }
  std::sort(scored.begin(), scored.end(),
            [](const RankedEntry& a, const RankedEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.doc_id < b.doc_id;
            });
  if (static_cast<int>(scored.size()) > k) scored.resize(k);
  for (std::size_t i = 0; i < scored.size(); ++i)
    scored[i].rank = static_cast<int>(i) + 1;

  RankedList list;
  list.user = user.subject;
  list.k = k;
  list.entries = std::move(scored);
  return list;
}

}  // namespace scirec
