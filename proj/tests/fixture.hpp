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

#ifndef SCIREC_TESTS_FIXTURE_HPP_
#define SCIREC_TESTS_FIXTURE_HPP_

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "scirec/rng.hpp"
#include "scirec/temporal.hpp"
#include "testutil.hpp"

namespace scirec::testutil {

// Synthetic world with planted interests: the taxonomy is a forest of
// disjoint subtrees, every user tweets mostly labels from one home subtree,
// and every document is generated from one subtree. A document is relevant
// to a user iff their subtrees coincide.
struct WorldSpec {
  int n_subtrees = 10;
  int concepts_per_subtree = 20;  // 1 root + 4 mid + leaves
  int n_docs = 1000;
  int n_users = 20;
  int tweets_per_user = 200;
  int background_items = 0;  // 0 = auto: 20% above factor * tweets_per_user
  double background_factor = 5.0;
  std::string now = "2016-04-01";
  int now_year = 2016;
  int lda_k = 8;
  int lda_train_iterations = 60;
  int lda_infer_iterations = 40;
  long lda_min_df = 2;
  std::uint64_t seed = 424242;
  // Extra users appended after the regular ones, as (suffix, mode) where
  // mode: 0 = recent concept tweets, 1 = only stale tweets (400+ days old),
  // 2 = recent tweets with no concept tokens.
  std::vector<std::pair<std::string, int>> extra_users;
};

struct World {
  std::filesystem::path config;
  std::map<std::string, int> doc_subtree;   // doc id -> subtree
  std::map<std::string, int> user_subtree;  // user id -> subtree
  int n_subtrees = 0;
  int n_docs = 0;
};

inline std::string world_label(int concept_index) {
  return "w" + std::to_string(concept_index) + "x";
}

inline World build_world(const TempDir& dir, const WorldSpec& spec) {
  Rng rng(spec.seed);
  World world;
  world.n_subtrees = spec.n_subtrees;
  world.n_docs = spec.n_docs;
  const int n_concepts = spec.n_subtrees * spec.concepts_per_subtree;

  auto concept_of = [&](int subtree, std::size_t pick) {
    return subtree * spec.concepts_per_subtree +
           static_cast<int>(pick % spec.concepts_per_subtree);
  };
  auto filler = [&]() {
    return "filler" + std::to_string(uniform_below(rng, 50));
  };

  // Taxonomy: per subtree, concept 0 is the root, 1..4 are its children,
  // the rest hang under those children round-robin.
  {
    std::ostringstream os;
    os << "{\"concepts\": [\n";
    bool first = true;
    for (int s = 0; s < spec.n_subtrees; ++s) {
      for (int i = 0; i < spec.concepts_per_subtree; ++i) {
        const int idx = s * spec.concepts_per_subtree + i;
        if (!first) os << ",\n";
        first = false;
        os << "  {\"id\": \"c" << idx << "\", \"pref_label\": \""
           << world_label(idx) << "\"";
        if (i >= 1 && i <= 4) {
          os << ", \"parents\": [\"c" << s * spec.concepts_per_subtree
             << "\"]";
        } else if (i > 4) {
          const int mid = s * spec.concepts_per_subtree + 1 + (i - 5) % 4;
          os << ", \"parents\": [\"c" << mid << "\"]";
        }
        os << "}";
      }
    }
    os << "\n]}\n";
    dir.write("taxonomy.json", os.str());
  }

  // Corpus: documents draw their concept tokens from one subtree.
  {
    std::ostringstream os;
    for (int d = 0; d < spec.n_docs; ++d) {
      const int s = d % spec.n_subtrees;
      const std::string id = "doc" + std::to_string(d);
      world.doc_subtree[id] = s;
      const std::string l1 = world_label(concept_of(s, uniform_below(rng, 97)));
      const std::string l2 = world_label(concept_of(s, uniform_below(rng, 97)));
      std::ostringstream body;
      const int n_tok = 12 + static_cast<int>(uniform_below(rng, 8));
      for (int t = 0; t < n_tok; ++t) {
        if (t) body << " ";
        const double roll = uniform_unit(rng);
        if (roll < 0.6)
          body << world_label(concept_of(s, uniform_below(rng, 997)));
        else if (roll < 0.75)
          body << world_label(uniform_below(rng, n_concepts));
        else
          body << filler();
      }
      os << "{\"id\": \"" << id << "\", \"title\": \"the study of " << l1
         << " and " << l2 << "\", \"fulltext\": \"" << body.str()
         << "\", \"year\": " << (spec.now_year - 8 + d % 9) << "}\n";
    }
    dir.write("corpus.jsonl", os.str());
  }

  // Tweets: recent, mostly home-subtree labels with some noise.
  {
    std::ostringstream os;
    auto write_tweet = [&](const std::string& user, const std::string& id,
                           long days_ago, int subtree, bool concepts) {
      std::ostringstream text;
      const int n_tok = 3 + static_cast<int>(uniform_below(rng, 4));
      for (int t = 0; t < n_tok; ++t) {
        if (t) text << " ";
        const double roll = uniform_unit(rng);
        if (!concepts)
          text << filler();
        else if (roll < 0.7)
          text << world_label(concept_of(subtree, uniform_below(rng, 997)));
        else if (roll < 0.8)
          text << world_label(uniform_below(rng, n_concepts));
        else
          text << filler();
      }
      os << "{\"id\": \"" << id << "\", \"user\": \"" << user
         << "\", \"text\": \"" << text.str() << "\", \"days\": "
         << (days_from_civil(parse_civil(spec.now)) - days_ago) << "}\n";
    };
    for (int u = 0; u < spec.n_users; ++u) {
      const std::string user = "user" + std::to_string(u);
      const int s = u % spec.n_subtrees;
      world.user_subtree[user] = s;
      for (int i = 0; i < spec.tweets_per_user; ++i)
        write_tweet(user, user + "_t" + std::to_string(i),
                    1 + uniform_below(rng, 200), s, true);
    }
    for (const auto& [suffix, mode] : spec.extra_users) {
      const std::string user = "user_" + suffix;
      world.user_subtree[user] = 0;
      for (int i = 0; i < spec.tweets_per_user; ++i) {
        const long days_ago = mode == 1 ? 400 + uniform_below(rng, 200)
                                        : 1 + uniform_below(rng, 200);
        write_tweet(user, user + "_t" + std::to_string(i), days_ago, 0,
                    mode != 2);
      }
    }
    dir.write("tweets.jsonl", os.str());
  }

  // Background pool: uniform concepts over the whole taxonomy.
  {
    const int max_tweets = spec.tweets_per_user;
    const int pool = spec.background_items > 0
                         ? spec.background_items
                         : static_cast<int>(spec.background_factor *
                                            max_tweets * 1.2) + 10;
    std::ostringstream os;
    for (int i = 0; i < pool; ++i) {
      std::ostringstream text;
      const int n_tok = 2 + static_cast<int>(uniform_below(rng, 3));
      for (int t = 0; t < n_tok; ++t) {
        if (t) text << " ";
        if (uniform_unit(rng) < 0.6)
          text << world_label(uniform_below(rng, n_concepts));
        else
          text << filler();
      }
      os << "{\"id\": \"bg" << i << "\", \"user\": \"bguser"
         << i % 37 << "\", \"text\": \"" << text.str() << "\", \"days\": "
         << (days_from_civil(parse_civil(spec.now)) - 1 -
             uniform_below(rng, 600))
         << "}\n";
    }
    dir.write("background.jsonl", os.str());
  }

  dir.write("stopwords.txt", "the\nof\nand\n");
  dir.write("rules.tsv", "sses\tss\t5\nies\ty\t5\nss\tss\t1\ns\t\t4\n");

  std::ostringstream conf;
  conf << "taxonomy = taxonomy.json\n"
       << "corpus = corpus.jsonl\n"
       << "tweets = tweets.jsonl\n"
       << "background = background.jsonl\n"
       << "stopwords = stopwords.txt\n"
       << "suffix_rules = rules.tsv\n"
       << "now = " << spec.now << "\n"
       << "seed = " << spec.seed << "\n"
       << "background_factor = " << spec.background_factor << "\n"
       << "lda.k = " << spec.lda_k << "\n"
       << "lda.train_iterations = " << spec.lda_train_iterations << "\n"
       << "lda.infer_iterations = " << spec.lda_infer_iterations << "\n"
       << "lda.min_df = " << spec.lda_min_df << "\n"
       << "out_dir = out\n";
  world.config = dir.write("run.conf", conf.str());
  return world;
}

inline std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace scirec::testutil

#endif  // SCIREC_TESTS_FIXTURE_HPP_
