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

#ifndef SCIREC_TEMPORAL_HPP_
#define SCIREC_TEMPORAL_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scirec/profile.hpp"

namespace scirec {

enum class TimeKind { item_days, doc_year };

// Social items are timestamped in days since 1970-01-01; documents carry a
// publication year only.
struct TimePoint {
  TimeKind kind = TimeKind::item_days;
  long value = 0;

  static TimePoint item_days(long days) {
    return {TimeKind::item_days, days};
  }
  static TimePoint doc_year(long year) { return {TimeKind::doc_year, year}; }
};

struct CivilDate {
  int year = 1970;
  int month = 1;
  int day = 1;
};

CivilDate parse_civil(std::string_view iso_date);  // "YYYY-MM-DD"
long days_from_civil(const CivilDate& date);       // days since 1970-01-01

enum class DecayKind { sliding_window, exponential };

std::string_view to_string(DecayKind k);
DecayKind parse_decay(std::string_view s);

struct DecaySpec {
  DecayKind kind = DecayKind::sliding_window;
  double thresh_social_days = 250.0;
  double thresh_doc_years = 9.04;
  double tau_social_days = 360.0;
  double tau_doc_years = 13.05;
  long now_days = 0;
  long now_year = 0;

  static DecaySpec at(DecayKind kind, const CivilDate& now);
};

// Sliding window: 1 while age <= threshold, 0 beyond. Exponential:
// e^(-age/tau). Units follow the TimePoint kind (integer days for items,
// integer year difference for documents). A timestamp in the future of
// `now` throws.
double decay_factor(const DecaySpec& spec, TimePoint t);

// w(c, I_u) = sum over items of f(t_i) * w'(c, i). Fragments must share one
// concept-based method; LDA fragments are rejected (the user stream is one
// document there, so item decay does not apply).
ConceptProfile aggregate_user_profile(
    const std::vector<std::pair<ProfileFragment, TimePoint>>& per_item,
    const DecaySpec& spec, std::string subject);

struct DocumentDecay {
  bool kept = true;
  double factor = 1.0;
};

// Factor applied at similarity time (under cosine a baked-in per-document
// scalar would cancel). kept == false iff the sliding window removes the
// document.
DocumentDecay decay_document(TimePoint published, const DecaySpec& spec);

}  // namespace scirec

#endif  // SCIREC_TEMPORAL_HPP_
