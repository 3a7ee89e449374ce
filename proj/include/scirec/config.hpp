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

#ifndef SCIREC_CONFIG_HPP_
#define SCIREC_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace scirec {

struct LdaSettings {
  int K = 100;
  double alpha = 0.5;
  double beta = 0.1;
  int train_iterations = 500;
  int infer_iterations = 200;
  long min_df = 25;
};

struct DecayConstants {
  double thresh_social_days = 250.0;
  double thresh_doc_years = 9.04;
  double tau_social_days = 360.0;
  double tau_doc_years = 13.05;
};

struct RunConfig {
  std::filesystem::path taxonomy;
  std::filesystem::path synonyms;  // optional
  std::filesystem::path corpus;
  std::filesystem::path tweets;
  std::filesystem::path background;
  std::filesystem::path stopwords;
  std::filesystem::path suffix_rules;
  std::filesystem::path lda_model_all;    // optional; trained if absent
  std::filesystem::path lda_model_title;  // optional; trained if absent
  std::filesystem::path out_dir = "out";

  std::string now_date;  // "YYYY-MM-DD"; never wall-clock
  int k = 5;
  double background_factor = 5.0;
  std::uint64_t seed = 0;
  DecayConstants decay;
  LdaSettings lda;
  std::vector<std::string> strategy_filter;
};

// Flat key = value file; '#' comments; dotted keys for the decay and lda
// sections; `strategies` is a comma-separated list. Relative paths resolve
// against the config file's directory.
RunConfig load_run_config(const std::filesystem::path& path);

// Checks k, dates, referenced files and the strategy filter. Returns the
// list of problems (empty when the config is runnable).
std::vector<std::string> validate_run_config(const RunConfig& config);

}  // namespace scirec

#endif  // SCIREC_CONFIG_HPP_
