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

#include "scirec/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "scirec/error.hpp"

namespace scirec {

namespace {

constexpr std::string_view kReplacementChar = "\xEF\xBF\xBD";  // U+FFFD

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

// Structural UTF-8 validation; each malformed leading byte is replaced
// with U+FFFD and counted once.
std::string sanitize_utf8(std::string_view text, long* replaced) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = text[i];
    std::size_t need = 0;
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    } else if (c >= 0xC2 && c <= 0xDF) {
      need = 1;
    } else if (c >= 0xE0 && c <= 0xEF) {
      need = 2;
    } else if (c >= 0xF0 && c <= 0xF4) {
      need = 3;
    } else {
      out.append(kReplacementChar);
      ++*replaced;
      ++i;
      continue;
    }
    std::size_t have = 0;
    for (std::size_t j = 1; j <= need && i + j < text.size(); ++j) {
      if (!is_continuation(text[i + j])) break;
      ++have;
    }
    if (have == need) {
      out.append(text.substr(i, need + 1));
      i += need + 1;
    } else {
      out.append(kReplacementChar);
      ++*replaced;
      ++i;
    }
  }
  return out;
}

bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool has_prefix_ci(std::string_view token, std::string_view prefix) {
  if (token.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(token[i])) != prefix[i])
      return false;
  }
  return true;
}

bool is_url(std::string_view token) {
  return has_prefix_ci(token, "http://") || has_prefix_ci(token, "https://") ||
         has_prefix_ci(token, "www.");
}

}  // namespace

TokenSequence normalize(std::string_view text, const Stopwords& stopwords,
                        const SuffixRules& rules, NormalizeStats* stats) {
  long replaced = 0;
  const std::string clean = sanitize_utf8(text, &replaced);
  if (stats) stats->invalid_utf8 += replaced;

  TokenSequence out;
  std::size_t i = 0;
  const std::size_t n = clean.size();
  while (i < n) {
    while (i < n && is_ascii_space(clean[i])) ++i;
    std::size_t start = i;
    while (i < n && !is_ascii_space(clean[i])) ++i;
    if (i == start) break;
    std::string_view raw(clean.data() + start, i - start);

    if (is_url(raw)) continue;

    std::string token;
    token.reserve(raw.size());
    for (unsigned char c : raw) {
      if (c == '#' || c == '@') continue;
      if (c >= 0x80) {
        token.push_back(static_cast<char>(c));
        continue;
      }
      const unsigned char lower = std::tolower(c);
      if (std::isalnum(lower)) token.push_back(static_cast<char>(lower));
    }
    if (token.empty()) continue;
    if (stopwords.count(token)) continue;

    for (const auto& rule : rules) {
      if (token.size() < rule.min_token_len) continue;
      if (token.size() < rule.suffix.size()) continue;
      if (token.compare(token.size() - rule.suffix.size(),
                        rule.suffix.size(), rule.suffix) != 0)
        continue;
      token.replace(token.size() - rule.suffix.size(), rule.suffix.size(),
                    rule.replacement);
      break;
    }
    if (!token.empty()) out.push_back(std::move(token));
  }
  return out;
}

Stopwords load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("stopwords: cannot open '" + path.string() + "'");
  Stopwords words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) words.insert(line);
  }
  return words;
}

SuffixRules load_suffix_rules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("suffix rules: cannot open '" + path.string() + "'");
  SuffixRules rules;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw Error("suffix rules: line " + std::to_string(lineno) +
                  " needs suffix<TAB>replacement<TAB>min_token_len");
    SuffixRule rule;
    rule.suffix = line.substr(0, t1);
    rule.replacement = line.substr(t1 + 1, t2 - t1 - 1);
    try {
      rule.min_token_len = std::stoul(line.substr(t2 + 1));
    } catch (const std::exception&) {
      throw Error("suffix rules: line " + std::to_string(lineno) +
                  " has a non-numeric min_token_len");
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

std::string LabelIndex::key(const TokenSequence& tokens, std::size_t begin,
                            std::size_t len) {
  std::string k;
  for (std::size_t i = begin; i < begin + len; ++i) {
    if (i > begin) k.push_back('\x1f');
    k += tokens[i];
  }
  return k;
}

LabelIndex build_label_index(const Taxonomy& taxonomy,
                             const Stopwords& stopwords,
                             const SuffixRules& rules) {
  LabelIndex index;
  auto insert = [&](const std::string& label, const std::string& id) {
    const TokenSequence tokens = normalize(label, stopwords, rules);
    if (tokens.empty()) {
      ++index.dropped_labels;
      return;
    }
    index.entries[LabelIndex::key(tokens, 0, tokens.size())].insert(id);
    index.max_label_len = std::max(index.max_label_len, tokens.size());
  };
  for (const auto& [id, node] : taxonomy.concepts()) {
    insert(node.pref_label, id);
    for (const auto& alt : node.alt_labels) insert(alt, id);
  }
  return index;
}

ConceptCounts extract_concepts(const TokenSequence& tokens,
                               const LabelIndex& index) {
  ConceptCounts counts;
  const std::size_t n = tokens.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t matched = 0;
    const std::set<std::string>* ids = nullptr;
    const std::size_t longest = std::min(index.max_label_len, n - i);
    for (std::size_t len = longest; len >= 1; --len) {
      auto it = index.entries.find(LabelIndex::key(tokens, i, len));
      if (it != index.entries.end()) {
        matched = len;
        ids = &it->second;
        break;
      }
    }
    if (matched) {
      for (const auto& id : *ids) counts.add(id);
      i += matched;
    } else {
      ++i;
    }
  }
  return counts;
}

}  // namespace scirec
