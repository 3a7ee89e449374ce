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

#ifndef SCIREC_TEXT_HPP_
#define SCIREC_TEXT_HPP_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "scirec/profile.hpp"
#include "scirec/taxonomy.hpp"

namespace scirec {

using TokenSequence = std::vector<std::string>;
using Stopwords = std::unordered_set<std::string>;

// Ordered; the first matching rule applies. A rule matches when the token
// ends with `suffix` and has at least `min_token_len` bytes. A rule whose
// replacement equals its suffix acts as a stop (e.g. ss -> ss before the
// generic s-drop).
struct SuffixRule {
  std::string suffix;
  std::string replacement;
  std::size_t min_token_len = 0;
};
using SuffixRules = std::vector<SuffixRule>;

struct NormalizeStats {
  long invalid_utf8 = 0;
};

// Tokenization pipeline, applied per whitespace-separated token:
//   1. drop pure URLs (http://, https://, www. prefixes)
//   2. strip '#' and '@', keeping the token text
//   3. ASCII-lowercase
//   4. strip ASCII characters that are not alphanumeric (bytes >= 0x80 kept)
//   5. drop empties and stop words
//   6. apply the first matching suffix rule
// Malformed UTF-8 is replaced with U+FFFD beforehand and counted in stats.
TokenSequence normalize(std::string_view text, const Stopwords& stopwords,
                        const SuffixRules& rules,
                        NormalizeStats* stats = nullptr);

Stopwords load_stopwords(const std::filesystem::path& path);
// Lines of suffix<TAB>replacement<TAB>min_token_len.
SuffixRules load_suffix_rules(const std::filesystem::path& path);

// Gazetteer over normalized taxonomy labels. A label shared by several
// concepts maps to all of them.
struct LabelIndex {
  std::unordered_map<std::string, std::set<std::string>> entries;
  std::size_t max_label_len = 0;  // in tokens
  long dropped_labels = 0;        // labels that normalized to empty

  static std::string key(const TokenSequence& tokens, std::size_t begin,
                         std::size_t len);
};

LabelIndex build_label_index(const Taxonomy& taxonomy,
                             const Stopwords& stopwords,
                             const SuffixRules& rules);

// Greedy longest-match, left-to-right, non-overlapping scan. Every concept
// a matched label maps to is incremented by 1.
ConceptCounts extract_concepts(const TokenSequence& tokens,
                               const LabelIndex& index);

}  // namespace scirec

#endif  // SCIREC_TEXT_HPP_
