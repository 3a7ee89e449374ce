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

#include "scirec/strategy.hpp"

#include <algorithm>

#include "scirec/error.hpp"

namespace scirec {

std::string StrategyConfig::id() const {
  std::string s(to_string(profiling));
  s += '-';
  s += to_string(decay);
  s += '-';
  s += to_string(content);
  return s;
}

StrategyConfig StrategyConfig::parse(std::string_view id) {
  const auto d1 = id.find('-');
  const auto d2 = d1 == std::string_view::npos ? d1 : id.find('-', d1 + 1);
  if (d2 == std::string_view::npos)
    throw Error("strategy: malformed id '" + std::string(id) + "'");
  StrategyConfig s;
  s.profiling = parse_method(id.substr(0, d1));
  s.decay = parse_decay(id.substr(d1 + 1, d2 - d1 - 1));
  s.content = parse_content(id.substr(d2 + 1));
  return s;
}

std::vector<StrategyConfig> enumerate_strategies(
    const std::vector<std::string>& filter) {
  std::vector<StrategyConfig> all;
  for (Method m : {Method::cfidf, Method::hcfidf, Method::lda})
    for (DecayKind d : {DecayKind::sliding_window, DecayKind::exponential})
      for (ContentMode c : {ContentMode::all, ContentMode::title})
        all.push_back({m, d, c});
  if (filter.empty()) return all;

  std::vector<StrategyConfig> wanted;
  for (const auto& id : filter) {
    auto it = std::find_if(all.begin(), all.end(), [&](const StrategyConfig& s) {
      return s.id() == id;
    });
    if (it == all.end()) {
      std::string valid;
      for (const auto& s : all) valid += "\n  " + s.id();
      throw Error("strategy: unknown id '" + id + "'; valid ids are:" + valid);
    }
    wanted.push_back(*it);
  }
  // Canonical order regardless of the filter's order; duplicates collapse.
  std::vector<StrategyConfig> out;
  for (const auto& s : all) {
    if (std::find(wanted.begin(), wanted.end(), s) != wanted.end())
      out.push_back(s);
  }
  return out;
}

}  // namespace scirec
