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

#include <random>

#include "doctest.h"
#include "homograph/error.h"
#include "homograph/eval.h"
#include "test_util.h"

namespace homograph {
namespace {

SenseTaggedToken scored(int assigned, int n_homographs,
                        TokenStatus status = TokenStatus::kMatched) {
  SenseTaggedToken t;
  t.open_class = true;
  t.status = status;
  t.homograph_id = assigned;
  t.homograph_count = n_homographs;
  t.polyhomographic = n_homographs >= 2;
  return t;
}

TEST_CASE("perfect agreement") {
  std::vector<SenseTaggedToken> results;
  std::vector<std::optional<int>> gold;
  for (int i = 0; i < 10; ++i) {
    results.push_back(scored(1 + i % 2, 2 + i % 2));
    gold.push_back(1 + i % 2);
  }
  const auto r = evaluate(results, gold);
  CHECK(r.n_open_class == 10);
  CHECK(*r.accuracy_overall().value() == 1.0);
  CHECK(render_report(r, ReportFormat::kText).rfind("overall: 100.0%", 0) == 0);
}

// 4 mono tokens all right, 6 poly tokens with one wrong, plus an unknown
// word, an unannotated token and a closed-class token that must not count.
std::pair<std::vector<SenseTaggedToken>, std::vector<std::optional<int>>> mixed() {
  std::vector<SenseTaggedToken> results;
  std::vector<std::optional<int>> gold;
  for (int i = 0; i < 4; ++i) {
    results.push_back(scored(1, 1));
    gold.push_back(1);
  }
  for (int i = 0; i < 6; ++i) {
    results.push_back(scored(1, 3));
    gold.push_back(i == 0 ? 2 : 1);
  }
  SenseTaggedToken unknown;
  unknown.open_class = true;
  unknown.status = TokenStatus::kUnknownWord;
  results.push_back(unknown);
  gold.push_back(1);
  results.push_back(scored(1, 2));
  gold.push_back(std::nullopt);
  results.push_back(SenseTaggedToken{});
  gold.push_back(std::nullopt);
  return {results, gold};
}

TEST_CASE("stratified fixture") {
  const auto [results, gold] = mixed();
  const auto r = evaluate(results, gold);
  // Independent arithmetic: 9 of 10 right, 5 of 6 poly, 6 of 10 poly.
  CHECK(r.n_mono == 4);
  CHECK(r.n_poly == 6);
  CHECK(r.correct_mono == 4);
  CHECK(r.correct_poly == 5);
  CHECK(r.n_unknown == 1);
  CHECK(r.n_unannotated == 1);
  CHECK(r.n_open_class == 12);
  CHECK(*r.accuracy_overall().value() == doctest::Approx(0.9));
  CHECK(*r.accuracy_poly().value() == doctest::Approx(5.0 / 6.0));
  CHECK(*r.accuracy_mono().value() == 1.0);
  CHECK(*r.poly_share().value() == doctest::Approx(0.6));
  CHECK(render_report(r, ReportFormat::kText).rfind(
            "overall: 90.0% poly: 83.3% mono: 100.0% poly-share: 60.0%\n", 0) == 0);
}

TEST_CASE("counting identities") {
  std::mt19937 rng(17);
  for (int round = 0; round < 500; ++round) {
    std::vector<SenseTaggedToken> results;
    std::vector<std::optional<int>> gold;
    std::int64_t correct = 0;
    const int n = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < n; ++i) {
      const int kind = rng() % 5;
      SenseTaggedToken t;
      if (kind == 0) {
        t.status = TokenStatus::kClosedClass;
      } else if (kind == 1) {
        t.open_class = true;
        t.status = TokenStatus::kUnknownWord;
      } else {
        const int nh = 1 + rng() % 4;
        t = scored(1 + rng() % nh, nh,
                   rng() % 4 ? TokenStatus::kMatched : TokenStatus::kFallback);
      }
      std::optional<int> g;
      if (rng() % 4 && t.homograph_count > 0) g = 1 + rng() % t.homograph_count;
      if (t.open_class && t.status != TokenStatus::kUnknownWord && g &&
          t.homograph_id == g) {
        ++correct;
      }
      results.push_back(t);
      gold.push_back(g);
    }
    const auto r = evaluate(results, gold);
    REQUIRE(r.n_mono + r.n_poly + r.n_unknown + r.n_unannotated == r.n_open_class);
    REQUIRE(r.correct_mono + r.correct_poly == correct);
    if (r.accuracy_overall().defined() && r.accuracy_mono().defined() &&
        r.accuracy_poly().defined()) {
      const double lo = std::min(*r.accuracy_mono().value(), *r.accuracy_poly().value());
      const double hi = std::max(*r.accuracy_mono().value(), *r.accuracy_poly().value());
      REQUIRE(*r.accuracy_overall().value() >= lo - 1e-12);
      REQUIRE(*r.accuracy_overall().value() <= hi + 1e-12);
    }
    // Merging halves equals evaluating the whole.
    const auto half = results.size() / 2;
    auto left = evaluate({results.begin(), results.begin() + half},
                         {gold.begin(), gold.begin() + half});
    left += evaluate({results.begin() + half, results.end()},
                     {gold.begin() + half, gold.end()});
    REQUIRE(left == r);
  }
}

TEST_CASE("fallback tokens are scored and counted") {
  std::vector<SenseTaggedToken> results = {scored(1, 2, TokenStatus::kFallback),
                                           scored(1, 2, TokenStatus::kFallback),
                                           scored(2, 2)};
  const auto r = evaluate(results, {1, 2, 2});
  CHECK(r.fallback_count == 2);
  CHECK(r.fallback_scored == 2);
  CHECK(r.fallback_correct == 1);
  CHECK(r.correct_poly == 2);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(evaluate({scored(1, 3)}, {}), DataError);
  auto t = scored(1, 3);
  t.token.line = 12;
  t.token.surface = "bank";
  CHECK_THROWS_WITH_AS(evaluate({t}, {7}),
                       "line 12: gold homograph id 7 for 'bank' outside 1..3",
                       DataError);
}

TEST_CASE("empty denominators render as n/a") {
  const EvalReport r;
  CHECK(render_report(r, ReportFormat::kText).rfind(
            "overall: n/a poly: n/a mono: n/a poly-share: n/a\n", 0) == 0);
  const auto json = render_report(r, ReportFormat::kStructured);
  CHECK(json.find(R"("accuracy_overall":null)") != std::string::npos);
}

TEST_CASE("structured report keys") {
  const auto [results, gold] = mixed();
  const auto json = render_report(evaluate(results, gold), ReportFormat::kStructured);
  CHECK(json.rfind(R"({"n_open_class":12,"n_unknown":1,"n_unannotated":1,"n_mono":4,"n_poly":6,)", 0) == 0);
  CHECK(json.find(R"("accuracy_overall":0.9)") != std::string::npos);
  CHECK(json.find(R"("poly_share":0.6)") != std::string::npos);
  CHECK(json.find(R"("fallback_count":0)") != std::string::npos);
}

}  // namespace
}  // namespace homograph
