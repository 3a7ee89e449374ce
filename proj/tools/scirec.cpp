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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scirec/config.hpp"
#include "scirec/error.hpp"
#include "scirec/pipeline.hpp"
#include "scirec/rng.hpp"
#include "scirec/strategy.hpp"
#include "scirec/temporal.hpp"
#include "scirec/text.hpp"
#include "scirec/topic_model.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string now;
  std::string strategies;
  std::string out_dir;
  std::int64_t seed = -1;
  int k = -1;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--config", opts->config_path, "Run configuration file")
      ->required();
  cmd->add_option("--seed", opts->seed, "Override the configured seed");
  cmd->add_option("--now", opts->now, "Override 'now' (YYYY-MM-DD)");
  cmd->add_option("--k", opts->k, "Override recommendations per strategy");
  cmd->add_option("--strategies", opts->strategies,
                  "Comma-separated strategy ids to run");
  cmd->add_option("--out", opts->out_dir, "Override the output directory");
}

scirec::RunConfig resolve(const CommonOpts& opts) {
  scirec::RunConfig config = scirec::load_run_config(opts.config_path);
  if (opts.seed >= 0) config.seed = static_cast<std::uint64_t>(opts.seed);
  if (!opts.now.empty()) config.now_date = opts.now;
  if (opts.k > 0) config.k = opts.k;
  if (!opts.out_dir.empty()) config.out_dir = opts.out_dir;
  if (!opts.strategies.empty()) {
    config.strategy_filter.clear();
    std::size_t begin = 0;
    while (begin <= opts.strategies.size()) {
      auto comma = opts.strategies.find(',', begin);
      if (comma == std::string::npos) comma = opts.strategies.size();
      if (comma > begin)
        config.strategy_filter.push_back(
            opts.strategies.substr(begin, comma - begin));
      begin = comma + 1;
    }
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Content-based recommendation of scientific publications "
               "from social media streams"};
  app.require_subcommand(1);

  CommonOpts run_opts;
  auto* run = app.add_subcommand(
      "run", "Run the strategy matrix and write recommendations");
  add_common(run, &run_opts);

  CommonOpts train_opts;
  std::string train_content = "ALL";
  std::string train_out = "lda_model.json";
  std::string sweep_k;
  auto* train =
      app.add_subcommand("train-lda", "Train an LDA topic model");
  add_common(train, &train_opts);
  train->add_option("--content", train_content, "Corpus view: ALL or TITLE")
      ->check(CLI::IsMember({"ALL", "TITLE"}));
  train->add_option("--model-out", train_out, "Output model path");
  train->add_option("--sweep-k", sweep_k,
                    "Comma-separated K values; prints corpus log likelihood "
                    "per K instead of writing a model");

  CommonOpts eval_opts;
  std::string recs_path, judgments_path;
  std::string metrics_out = "metrics.csv";
  std::string per_user_out = "metrics_per_user.csv";
  auto* evaluate = app.add_subcommand(
      "evaluate", "Score recorded judgments against recommendations");
  evaluate->add_option("--recommendations", recs_path,
                       "recommendations.jsonl from a run")
      ->required();
  evaluate->add_option("--judgments", judgments_path, "judgments.csv")
      ->required();
  evaluate->add_option("--metrics-out", metrics_out, "Aggregate table CSV");
  evaluate->add_option("--per-user-out", per_user_out,
                       "Per-user long-form CSV");

  CommonOpts validate_opts;
  auto* validate = app.add_subcommand(
      "validate", "Check the configuration and referenced inputs");
  add_common(validate, &validate_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const scirec::RunConfig config = resolve(run_opts);
      const scirec::RunResult result = scirec::run_experiment(config);
      std::cout << "served " << result.served << " pair(s), unservable "
                << result.unservable << "\n"
                << "recommendations: " << result.recommendations.string()
                << "\n"
                << "manifest: " << result.manifest.string() << "\n";
    } else if (train->parsed()) {
      scirec::RunConfig config = resolve(train_opts);
      const scirec::ContentMode mode = scirec::parse_content(train_content);
      if (!sweep_k.empty()) {
        const scirec::CivilDate now = scirec::parse_civil(config.now_date);
        const auto stopwords = scirec::load_stopwords(config.stopwords);
        const auto rules = scirec::load_suffix_rules(config.suffix_rules);
        const auto docs = scirec::load_corpus(config.corpus, mode, now.year);
        std::vector<scirec::TokenSequence> tokenized;
        for (const auto& doc : docs)
          tokenized.push_back(scirec::normalize(doc.text(), stopwords, rules));
        const auto vocab =
            scirec::build_vocabulary(tokenized, config.lda.min_df);
        std::cout << "K,log_likelihood\n";
        std::size_t begin = 0;
        while (begin <= sweep_k.size()) {
          auto comma = sweep_k.find(',', begin);
          if (comma == std::string::npos) comma = sweep_k.size();
          if (comma > begin) {
            const int K = std::stoi(sweep_k.substr(begin, comma - begin));
            scirec::LdaParams params{K, config.lda.alpha, config.lda.beta,
                                     config.lda.train_iterations};
            const auto model = scirec::train_lda(
                tokenized, vocab, params,
                scirec::derive_seed(config.seed,
                                    "lda-train:" + train_content));
            std::cout << K << ","
                      << scirec::log_likelihood(model, tokenized,
                                                config.lda.infer_iterations)
                      << "\n";
          }
          begin = comma + 1;
        }
      } else {
        scirec::train_lda_command(config, mode, train_out);
        std::cout << "model written to " << train_out << "\n";
      }
    } else if (evaluate->parsed()) {
      scirec::evaluate_command(recs_path, judgments_path, metrics_out,
                               per_user_out);
      std::cout << "metrics: " << metrics_out << "\n"
                << "per-user: " << per_user_out << "\n";
    } else if (validate->parsed()) {
      const scirec::RunConfig config = resolve(validate_opts);
      const auto problems = scirec::validate_run_config(config);
      if (problems.empty()) {
        std::cout << "config OK\n";
      } else {
        for (const auto& p : problems) std::cerr << "problem: " << p << "\n";
        return 1;
      }
    }
  } catch (const scirec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
