// Copyright 2026 The Homograph Tagger Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOMOGRAPH_EVAL_H_
#define HOMOGRAPH_EVAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homograph/pipeline.h"
#include "homograph/ratio.h"
#include "homograph/report_format.h"

namespace homograph {

// Homograph accuracy over open-class tokens, split by whether the token's
// word type has one homograph or several.
//
// Only tokens that are open class, known to the lexicon and gold-annotated
// are scored. Fallback tokens are scored like matched ones and also counted
// on their own, so they can be subtracted out afterwards.
struct EvalReport {
  std::int64_t n_open_class = 0;
  std::int64_t n_unknown = 0;
  std::int64_t n_unannotated = 0;  // open class, known, no gold id
  std::int64_t n_mono = 0;
  std::int64_t n_poly = 0;
  std::int64_t correct_mono = 0;
  std::int64_t correct_poly = 0;
  std::int64_t fallback_count = 0;    // all Fallback tokens
  std::int64_t fallback_scored = 0;   // Fallback tokens with gold ids
  std::int64_t fallback_correct = 0;

  Ratio accuracy_overall() const {
    return {correct_mono + correct_poly, n_mono + n_poly};
  }
  Ratio accuracy_mono() const { return {correct_mono, n_mono}; }
  Ratio accuracy_poly() const { return {correct_poly, n_poly}; }
  Ratio poly_share() const { return {n_poly, n_mono + n_poly}; }

  EvalReport& operator+=(const EvalReport& other);
  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// gold is position-aligned with results. Throws DataError on a length
// mismatch or on a gold id outside 1..n for a known word type.
EvalReport evaluate(const std::vector<SenseTaggedToken>& results,
                    const std::vector<std::optional<int>>& gold);

// Uses the gold ids carried by the tokens themselves.
EvalReport evaluate(const std::vector<TaggedDocument>& results);

// Text starts with "overall: 90.0% poly: 83.3% mono: 100.0% poly-share: 60.0%".
// Structured output is a single JSON object with stable keys; undefined
// fractions are null.
std::string render_report(const EvalReport& report, ReportFormat format);

}  // namespace homograph

#endif  // HOMOGRAPH_EVAL_H_
