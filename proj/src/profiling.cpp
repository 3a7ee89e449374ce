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

#include "scirec/profiling.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "scirec/rng.hpp"

namespace scirec {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::cfidf: return "CFIDF";
    case Method::hcfidf: return "HCFIDF";
    case Method::lda: return "LDA";
  }
  throw Error("unreachable method");
}

Method parse_method(std::string_view s) {
  if (s == "CFIDF") return Method::cfidf;
  if (s == "HCFIDF") return Method::hcfidf;
  if (s == "LDA") return Method::lda;
  throw Error("unknown profiling method '" + std::string(s) + "'");
}

std::map<std::string, double> concept_frequency(const ConceptCounts& counts) {
  std::map<std::string, double> cf;
  if (counts.total == 0) return cf;
  for (const auto& [id, n] : counts.counts)
    cf[id] = static_cast<double>(n) / static_cast<double>(counts.total);
  return cf;
}

namespace {

void add_doc_freq(std::map<std::string, long>& df,
                  const std::vector<CountedItem>& items) {
  for (const auto& item : items)
    for (const auto& [id, n] : item.counts.counts) df[id] += 1;
}

// Shared by all four weightings so CF-IDF and HCF-IDF stay bit-identical
// when the activation degenerates to cf.
WeightMap apply_idf(const std::map<std::string, double>& activation,
                    const std::map<std::string, long>& doc_freq,
                    long n_total) {
  WeightMap weights;
  for (const auto& [id, act] : activation) {
    auto it = doc_freq.find(id);
    if (it == doc_freq.end() || it->second == 0) continue;
    const double idf = std::log(static_cast<double>(n_total) /
                                static_cast<double>(it->second));
    const double w = act * idf;
    if (w > 0.0) weights.emplace(id, w);
  }
  return weights;
}

}  // namespace

ItemCorpusStats compute_item_stats(const std::vector<CountedItem>& user_items,
                                   const std::vector<CountedItem>& background) {
  std::set<std::string> user_ids;
  for (const auto& item : user_items) user_ids.insert(item.id);
  for (const auto& item : background) {
    if (user_ids.count(item.id))
      throw Error("item stats: item '" + item.id +
                  "' appears in both user and background sets");
  }
  ItemCorpusStats stats;
  stats.n_user_items = static_cast<long>(user_items.size());
  stats.n_background = static_cast<long>(background.size());
  add_doc_freq(stats.doc_freq, user_items);
  add_doc_freq(stats.doc_freq, background);
  return stats;
}

DocCorpusStats compute_doc_stats(const std::vector<CountedItem>& docs) {
  DocCorpusStats stats;
  stats.n_docs = static_cast<long>(docs.size());
  add_doc_freq(stats.doc_freq, docs);
  return stats;
}

ProfileFragment cfidf_item_weights(const ConceptCounts& item_counts,
                                   const ItemCorpusStats& stats) {
  ProfileFragment fragment;
  fragment.method = Method::cfidf;
  fragment.weights = apply_idf(concept_frequency(item_counts), stats.doc_freq,
                               stats.n_total());
  return fragment;
}

ConceptProfile cfidf_doc_weights(const ConceptCounts& doc_counts,
                                 const DocCorpusStats& stats,
                                 std::string subject) {
  ConceptProfile profile;
  profile.method = Method::cfidf;
  profile.subject = std::move(subject);
  profile.weights =
      apply_idf(concept_frequency(doc_counts), stats.doc_freq, stats.n_docs);
  return profile;
}

namespace {

struct BellLogEval {
  const Taxonomy& taxonomy;
  const std::map<std::string, double>& cf;
  std::map<std::string, double> memo;

  double eval(const std::string& id) {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    // Parent links form a DAG, so recursion over children terminates.
    double bl = 0.0;
    auto cf_it = cf.find(id);
    if (cf_it != cf.end()) bl = cf_it->second;
    const auto& children = taxonomy.children_of(id);
    if (!children.empty()) {
      const int below = taxonomy.level_of(id) + 1;
      const int nodes = taxonomy.nodes_at_level(below);
      // log10 of <= 1 nodes is 0 or undefined; spreading is disabled there.
      const double fl = nodes > 1 ? 1.0 / std::log10(nodes) : 0.0;
      double sum = 0.0;
      for (const auto& child : children) sum += eval(child);
      bl += fl * sum;
    }
    memo.emplace(id, bl);
    return bl;
  }
};

}  // namespace

std::map<std::string, double> belllog(const ConceptCounts& counts,
                                      const Taxonomy& taxonomy) {
  for (const auto& [id, n] : counts.counts) {
    if (!taxonomy.contains(id))
      throw Error("belllog: counted concept '" + id +
                  "' is not in the taxonomy");
  }
  std::map<std::string, double> result;
  if (counts.total == 0) return result;

  const auto cf = concept_frequency(counts);
  BellLogEval eval{taxonomy, cf, {}};
  for (const auto& [id, node] : taxonomy.concepts()) {
    const double bl = eval.eval(id);
    if (bl > 0.0) result.emplace(id, bl);
  }
  return result;
}

ProfileFragment hcfidf_item_weights(const ConceptCounts& item_counts,
                                    const ItemCorpusStats& stats,
                                    const Taxonomy& taxonomy) {
  ProfileFragment fragment;
  fragment.method = Method::hcfidf;
  fragment.weights =
      apply_idf(belllog(item_counts, taxonomy), stats.doc_freq,
                stats.n_total());
  return fragment;
}

ConceptProfile hcfidf_doc_weights(const ConceptCounts& doc_counts,
                                  const DocCorpusStats& stats,
                                  const Taxonomy& taxonomy,
                                  std::string subject) {
  ConceptProfile profile;
  profile.method = Method::hcfidf;
  profile.subject = std::move(subject);
  profile.weights =
      apply_idf(belllog(doc_counts, taxonomy), stats.doc_freq, stats.n_docs);
  return profile;
}

std::vector<std::size_t> sample_background_indices(std::size_t pool_size,
                                                   std::size_t n_user_items,
                                                   double factor,
                                                   std::uint64_t seed) {
  if (factor < 0.0) throw Error("background sample: negative factor");
  const auto need = static_cast<std::size_t>(
      std::ceil(factor * static_cast<double>(n_user_items)));
  if (need > pool_size)
    throw Error("background sample: need " + std::to_string(need) +
                " items but pool has only " + std::to_string(pool_size));
  std::vector<std::size_t> indices(pool_size);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  Rng rng(seed);
  // Partial Fisher-Yates: the first `need` slots are the sample.
  for (std::size_t i = 0; i < need; ++i) {
    const std::size_t j = i + uniform_below(rng, pool_size - i);
    std::swap(indices[i], indices[j]);
  }
  indices.resize(need);
  return indices;
}

}  // namespace scirec
