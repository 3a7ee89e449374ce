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

#include "scirec/config.hpp"

#include <fstream>
#include <map>
#include <set>

#include "scirec/error.hpp"
#include "scirec/strategy.hpp"
#include "scirec/temporal.hpp"

namespace scirec {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                        (v.front() == '\'' && v.back() == '\'')))
    return v.substr(1, v.size() - 2);
  return v;
}

class KeyValues {
 public:
  explicit KeyValues(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open '" + path.string() + "'");
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw Error("config: line " + std::to_string(lineno) +
                    " is not 'key = value'");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = unquote(trim(line.substr(eq + 1)));
      if (key.empty())
        throw Error("config: empty key on line " + std::to_string(lineno));
      if (!values_.emplace(key, value).second)
        throw Error("config: duplicate key '" + key + "'");
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string str(const std::string& key, const std::string& fallback = "") {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    used_.insert(it->first);
    return it->second;
  }

  template <typename T, typename Parse>
  T num(const std::string& key, T fallback, Parse parse) {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    used_.insert(it->first);
    try {
      return parse(it->second);
    } catch (const std::exception&) {
      throw Error("config: key '" + key + "' has a malformed value '" +
                  it->second + "'");
    }
  }

  std::vector<std::string> unknown_keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_)
      if (!used_.count(k)) out.push_back(k);
    return out;
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (begin <= s.size()) {
    auto comma = s.find(',', begin);
    if (comma == std::string::npos) comma = s.size();
    const std::string part = trim(s.substr(begin, comma - begin));
    if (!part.empty()) out.push_back(part);
    begin = comma + 1;
  }
  return out;
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
  KeyValues kv(path);
  const std::filesystem::path base = path.parent_path();
  auto resolve = [&](const std::string& value) -> std::filesystem::path {
    if (value.empty()) return {};
    std::filesystem::path p(value);
    return p.is_absolute() ? p : base / p;
  };

  RunConfig config;
  config.taxonomy = resolve(kv.str("taxonomy"));
  config.synonyms = resolve(kv.str("synonyms"));
  config.corpus = resolve(kv.str("corpus"));
  config.tweets = resolve(kv.str("tweets"));
  config.background = resolve(kv.str("background"));
  config.stopwords = resolve(kv.str("stopwords"));
  config.suffix_rules = resolve(kv.str("suffix_rules"));
  config.lda_model_all = resolve(kv.str("lda_model_all"));
  config.lda_model_title = resolve(kv.str("lda_model_title"));
  config.out_dir = resolve(kv.str("out_dir", "out"));
  config.now_date = kv.str("now");
  config.k = kv.num<int>("k", 5, [](const std::string& v) { return std::stoi(v); });
  config.background_factor = kv.num<double>(
      "background_factor", 5.0,
      [](const std::string& v) { return std::stod(v); });
  config.seed = kv.num<std::uint64_t>(
      "seed", 0, [](const std::string& v) { return std::stoull(v); });

  auto stod = [](const std::string& v) { return std::stod(v); };
  auto stoi = [](const std::string& v) { return std::stoi(v); };
  auto stol = [](const std::string& v) { return std::stol(v); };
  config.decay.thresh_social_days =
      kv.num<double>("decay.thresh_social_days", 250.0, stod);
  config.decay.thresh_doc_years =
      kv.num<double>("decay.thresh_doc_years", 9.04, stod);
  config.decay.tau_social_days =
      kv.num<double>("decay.tau_social_days", 360.0, stod);
  config.decay.tau_doc_years =
      kv.num<double>("decay.tau_doc_years", 13.05, stod);

  config.lda.K = kv.num<int>("lda.k", 100, stoi);
  config.lda.alpha = kv.num<double>("lda.alpha", 0.5, stod);
  config.lda.beta = kv.num<double>("lda.beta", 0.1, stod);
  config.lda.train_iterations = kv.num<int>("lda.train_iterations", 500, stoi);
  config.lda.infer_iterations = kv.num<int>("lda.infer_iterations", 200, stoi);
  config.lda.min_df = kv.num<long>("lda.min_df", 25, stol);

  config.strategy_filter = split_csv(kv.str("strategies"));

  const auto unknown = kv.unknown_keys();
  if (!unknown.empty()) {
    std::string what = "config: unknown key(s):";
    for (const auto& k : unknown) what += " '" + k + "'";
    throw Error(what);
  }
  return config;
}

std::vector<std::string> validate_run_config(const RunConfig& config) {
  std::vector<std::string> problems;
  auto require_file = [&](const std::filesystem::path& p,
                          const std::string& what, bool optional) {
    if (p.empty()) {
      if (!optional) problems.push_back("missing required path: " + what);
      return;
    }
    if (!std::filesystem::is_regular_file(p))
      problems.push_back(what + " file not found: '" + p.string() + "'");
  };
  require_file(config.taxonomy, "taxonomy", false);
  require_file(config.synonyms, "synonyms", true);
  require_file(config.corpus, "corpus", false);
  require_file(config.tweets, "tweets", false);
  require_file(config.background, "background", false);
  require_file(config.stopwords, "stopwords", false);
  require_file(config.suffix_rules, "suffix_rules", false);
  require_file(config.lda_model_all, "lda_model_all", true);
  require_file(config.lda_model_title, "lda_model_title", true);

  if (config.k < 1) problems.push_back("k must be >= 1");
  if (config.background_factor < 0)
    problems.push_back("background_factor must be >= 0");
  for (double v :
       {config.decay.thresh_social_days, config.decay.thresh_doc_years,
        config.decay.tau_social_days, config.decay.tau_doc_years}) {
    if (v <= 0) {
      problems.push_back("decay constants must be > 0");
      break;
    }
  }
  if (config.now_date.empty()) {
    problems.push_back("'now' date is required (YYYY-MM-DD)");
  } else {
    try {
      parse_civil(config.now_date);
    } catch (const Error& e) {
      problems.push_back(e.what());
    }
  }
  if (config.lda.K < 1) problems.push_back("lda.k must be >= 1");
  try {
    enumerate_strategies(config.strategy_filter);
  } catch (const Error& e) {
    problems.push_back(e.what());
  }
  return problems;
}

}  // namespace scirec
