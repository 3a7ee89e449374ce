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

#ifndef SCIREC_STRATEGY_HPP_
#define SCIREC_STRATEGY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "scirec/corpus.hpp"
#include "scirec/profile.hpp"
#include "scirec/temporal.hpp"

namespace scirec {

// One cell of the 3 (profiling) x 2 (decay) x 2 (content) matrix.
struct StrategyConfig {
  Method profiling = Method::cfidf;
  DecayKind decay = DecayKind::sliding_window;
  ContentMode content = ContentMode::all;

  std::string id() const;
  static StrategyConfig parse(std::string_view id);

  bool operator==(const StrategyConfig&) const = default;
};

// All 12 strategies in canonical order, or the filtered subset in that
// order. Unknown filter ids throw, listing the valid ids.
std::vector<StrategyConfig> enumerate_strategies(
    const std::vector<std::string>& filter = {});

}  // namespace scirec

#endif  // SCIREC_STRATEGY_HPP_
