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

#ifndef SCIREC_RANKING_HPP_
#define SCIREC_RANKING_HPP_

#include <string>
#include <vector>

#include "scirec/profile.hpp"
#include "scirec/temporal.hpp"

namespace scirec {

struct RankedEntry {
  int rank = 0;  // 1-based
  std::string doc_id;
  double score = 0.0;
};

struct RankedList {
  std::string user;
  std::string strategy;
  int k = 0;
  std::vector<RankedEntry> entries;  // scores non-increasing, ids distinct
};

// Sparse cosine over shared entries; 0 when either profile is empty.
// Weights are nonnegative, so the range is [0, 1].
double cosine(const ConceptProfile& u, const ConceptProfile& d);

// factor * cosine(u, d), the decayed similarity for concept methods.
double temporal_cosine(const ConceptProfile& u, const ConceptProfile& d,
                       double factor);

// factor * <u, d> for LDA topic distributions.
double dot(const ConceptProfile& u, const ConceptProfile& d, double factor);

struct Candidate {
  std::string doc_id;
  const ConceptProfile* profile = nullptr;
  TimePoint published;
};

// Scores with temporal_cosine (CFIDF/HCFIDF) or dot (LDA), drops documents
// the sliding window removes, sorts by score descending with ties broken by
// ascending doc id, and returns the top k. Throws UnservableError on an
// empty user profile; an empty candidate set returns an empty list.
RankedList rank_top_k(const ConceptProfile& user,
                      const std::vector<Candidate>& candidates,
                      const DecaySpec& spec, int k = 5);

}  // namespace scirec

#endif  // SCIREC_RANKING_HPP_
