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

#ifndef SCIREC_PIPELINE_HPP_
#define SCIREC_PIPELINE_HPP_

#include <filesystem>
#include <string>

#include "scirec/config.hpp"
#include "scirec/corpus.hpp"

namespace scirec {

struct RunResult {
  std::filesystem::path recommendations;
  std::filesystem::path manifest;
  int served = 0;
  int unservable = 0;
};

// Full matrix run: user profiling -> decay -> ranking, one pass per
// (user, strategy) pair, recommendations.jsonl plus manifest.json in
// config.out_dir. Deterministic for fixed (inputs, seed, now); a failing
// pair is recorded as unservable without aborting the rest.
RunResult run_experiment(const RunConfig& config);

// Trains one LDA model over the corpus under the given content mode and
// writes it to out_path.
void train_lda_command(const RunConfig& config, ContentMode mode,
                       const std::filesystem::path& out_path);

// Joins recommendations with judgments, computes all metrics, and writes
// the aggregate table plus a per-user long-form CSV.
void evaluate_command(const std::filesystem::path& recommendations,
                      const std::filesystem::path& judgments,
                      const std::filesystem::path& out_metrics_csv,
                      const std::filesystem::path& out_per_user_csv);

}  // namespace scirec

#endif  // SCIREC_PIPELINE_HPP_
