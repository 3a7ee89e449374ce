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

#ifndef SCIREC_PROFILING_HPP_
#define SCIREC_PROFILING_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scirec/error.hpp"
#include "scirec/profile.hpp"
#include "scirec/taxonomy.hpp"

namespace scirec {

// cf(c) = counts[c] / total. Empty counts yield an empty map.
std::map<std::string, double> concept_frequency(const ConceptCounts& counts);

// One text (social item or document) together with its extracted counts.
struct CountedItem {
  std::string id;
  ConceptCounts counts;
};

ItemCorpusStats compute_item_stats(const std::vector<CountedItem>& user_items,
                                   const std::vector<CountedItem>& background);

DocCorpusStats compute_doc_stats(const std::vector<CountedItem>& docs);

// w'(c,i) = cf(c,i) * ln(n_total / doc_freq(c)). Concepts with zero doc_freq
// are skipped; zero weights (ubiquitous concepts) are omitted.
ProfileFragment cfidf_item_weights(const ConceptCounts& item_counts,
                                   const ItemCorpusStats& stats);

ConceptProfile cfidf_doc_weights(const ConceptCounts& doc_counts,
                                 const DocCorpusStats& stats,
                                 std::string subject);

// BellLog spreading activation over the taxonomy DAG:
//   BL(c) = cf(c) + FL(c) * sum over direct children of BL(child)
//   FL(c) = 1 / log10(nodes_at_level(level_of(c) + 1)), 0 when that level
//   has <= 1 concepts.
// Only concepts with BL > 0 are returned.
std::map<std::string, double> belllog(const ConceptCounts& counts,
                                      const Taxonomy& taxonomy);

ProfileFragment hcfidf_item_weights(const ConceptCounts& item_counts,
                                    const ItemCorpusStats& stats,
                                    const Taxonomy& taxonomy);

ConceptProfile hcfidf_doc_weights(const ConceptCounts& doc_counts,
                                  const DocCorpusStats& stats,
                                  const Taxonomy& taxonomy,
                                  std::string subject);

// Uniform sample without replacement of ceil(factor * n_user_items) items,
// deterministic for a given seed. Defined over indices so any item type
// can be sampled.
std::vector<std::size_t> sample_background_indices(std::size_t pool_size,
                                                   std::size_t n_user_items,
                                                   double factor,
                                                   std::uint64_t seed);

template <typename Item>
std::vector<Item> sample_background(const std::vector<Item>& pool,
                                    std::size_t n_user_items, double factor,
                                    std::uint64_t seed) {
  std::vector<Item> out;
  for (std::size_t idx :
       sample_background_indices(pool.size(), n_user_items, factor, seed))
    out.push_back(pool[idx]);
  return out;
}

}  // namespace scirec

#endif  // SCIREC_PROFILING_HPP_
