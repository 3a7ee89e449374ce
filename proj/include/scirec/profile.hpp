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

#ifndef SCIREC_PROFILE_HPP_
#define SCIREC_PROFILE_HPP_

#include <map>
#include <string>
#include <string_view>

namespace scirec {

enum class Method { cfidf, hcfidf, lda };

std::string_view to_string(Method m);
Method parse_method(std::string_view s);

// Sparse nonnegative weight vector over concept (or topic) ids.
// Entries with weight 0 are never stored.
using WeightMap = std::map<std::string, double>;

struct ConceptProfile {
  Method method = Method::cfidf;
  std::string subject;
  WeightMap weights;

  bool empty() const { return weights.empty(); }
};

// Per-item (or per-document) weights before temporal aggregation.
struct ProfileFragment {
  Method method = Method::cfidf;
  WeightMap weights;
};

// Concept occurrence counts for one text. total is the number of times
// all concepts appear, i.e. the sum of counts.
struct ConceptCounts {
  std::map<std::string, long> counts;
  long total = 0;

  void add(const std::string& id, long n = 1) {
    counts[id] += n;
    total += n;
  }
  bool empty() const { return counts.empty(); }
};

// IDF statistics over a user's items plus the background sample.
struct ItemCorpusStats {
  long n_user_items = 0;
  long n_background = 0;
  std::map<std::string, long> doc_freq;

  long n_total() const { return n_user_items + n_background; }
};

// IDF statistics over the document collection.
struct DocCorpusStats {
  long n_docs = 0;
  std::map<std::string, long> doc_freq;
};

}  // namespace scirec

#endif  // SCIREC_PROFILE_HPP_
