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

#include "scirec/temporal.hpp"

#include <cmath>
#include <cstdio>

#include "scirec/error.hpp"

namespace scirec {

CivilDate parse_civil(std::string_view iso_date) {
  CivilDate d;
  char extra;
  const std::string s(iso_date);
  if (std::sscanf(s.c_str(), "%d-%d-%d%c", &d.year, &d.month, &d.day,
                  &extra) != 3)
    throw Error("date: expected YYYY-MM-DD, got '" + s + "'");
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
    throw Error("date: out-of-range month or day in '" + s + "'");
  return d;
}

// Howard Hinnant's civil-from-days algorithm, proleptic Gregorian.
long days_from_civil(const CivilDate& date) {
  const int y = date.year - (date.month <= 2 ? 1 : 0);
  const int era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy =
      (153u * (date.month + (date.month > 2 ? -3 : 9)) + 2) / 5 + date.day - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097L + static_cast<long>(doe) - 719468L;
}

std::string_view to_string(DecayKind k) {
  switch (k) {
    case DecayKind::sliding_window: return "SLIDING_WINDOW";
    case DecayKind::exponential: return "EXPONENTIAL";
  }
  throw Error("unreachable decay kind");
}

DecayKind parse_decay(std::string_view s) {
  if (s == "SLIDING_WINDOW") return DecayKind::sliding_window;
  if (s == "EXPONENTIAL") return DecayKind::exponential;
  throw Error("unknown decay function '" + std::string(s) + "'");
}

DecaySpec DecaySpec::at(DecayKind kind, const CivilDate& now) {
  DecaySpec spec;
  spec.kind = kind;
  spec.now_days = days_from_civil(now);
  spec.now_year = now.year;
  return spec;
}

double decay_factor(const DecaySpec& spec, TimePoint t) {
  double age, thresh, tau;
  if (t.kind == TimeKind::item_days) {
    age = static_cast<double>(spec.now_days - t.value);
    thresh = spec.thresh_social_days;
    tau = spec.tau_social_days;
  } else {
    age = static_cast<double>(spec.now_year - t.value);
    thresh = spec.thresh_doc_years;
    tau = spec.tau_doc_years;
  }
  if (age < 0.0)
    throw Error("decay: timestamp lies in the future of 'now'");
  if (spec.kind == DecayKind::sliding_window) return age <= thresh ? 1.0 : 0.0;
  return std::exp(-age / tau);
}

ConceptProfile aggregate_user_profile(
    const std::vector<std::pair<ProfileFragment, TimePoint>>& per_item,
    const DecaySpec& spec, std::string subject) {
  ConceptProfile profile;
  profile.subject = std::move(subject);
  if (per_item.empty()) return profile;

  const Method method = per_item.front().first.method;
  if (method == Method::lda)
    throw Error("aggregate: LDA user profiles bypass item decay");
  profile.method = method;

  for (const auto& [fragment, time] : per_item) {
    if (fragment.method != method)
      throw Error("aggregate: fragments mix profiling methods");
    const double factor = decay_factor(spec, time);
    if (factor == 0.0) continue;
    for (const auto& [id, w] : fragment.weights)
      profile.weights[id] += factor * w;
  }
  // Drop exact zeros so an all-zero aggregate is the empty profile.
  for (auto it = profile.weights.begin(); it != profile.weights.end();) {
    if (it->second == 0.0)
      it = profile.weights.erase(it);
    else
      ++it;
  }
  return profile;
}

DocumentDecay decay_document(TimePoint published, const DecaySpec& spec) {
  if (published.kind != TimeKind::doc_year)
    throw Error("decay: document timestamp must be a publication year");
  const double factor = decay_factor(spec, published);
  return {factor > 0.0, factor};
}

}  // namespace scirec
