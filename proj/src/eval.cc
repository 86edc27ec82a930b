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

#include "homograph/eval.h"

#include <sstream>

#include "homograph/error.h"
#include "json.hpp"

namespace homograph {

EvalReport& EvalReport::operator+=(const EvalReport& o) {
  n_open_class += o.n_open_class;
  n_unknown += o.n_unknown;
  n_unannotated += o.n_unannotated;
  n_mono += o.n_mono;
  n_poly += o.n_poly;
  correct_mono += o.correct_mono;
  correct_poly += o.correct_poly;
  fallback_count += o.fallback_count;
  fallback_scored += o.fallback_scored;
  fallback_correct += o.fallback_correct;
  return *this;
}

EvalReport evaluate(const std::vector<SenseTaggedToken>& results,
                    const std::vector<std::optional<int>>& gold) {
  if (results.size() != gold.size()) {
    throw DataError("gold annotations cover " + std::to_string(gold.size()) +
                    " tokens, results have " + std::to_string(results.size()));
  }
  EvalReport r;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& t = results[i];
    const auto& g = gold[i];
    if (g && t.homograph_count > 0 && (*g < 1 || *g > t.homograph_count)) {
      throw DataError("", t.token.line,
                      "gold homograph id " + std::to_string(*g) + " for '" +
                          t.token.surface + "' outside 1.." +
                          std::to_string(t.homograph_count));
    }
    if (t.status == TokenStatus::kFallback) ++r.fallback_count;
    if (!t.open_class) continue;
    ++r.n_open_class;
    if (t.status == TokenStatus::kUnknownWord) {
      ++r.n_unknown;
      continue;
    }
    if (!g) {
      ++r.n_unannotated;
      continue;
    }
    const bool correct = t.homograph_id == g;
    if (t.polyhomographic) {
      ++r.n_poly;
      if (correct) ++r.correct_poly;
    } else {
      ++r.n_mono;
      if (correct) ++r.correct_mono;
    }
    if (t.status == TokenStatus::kFallback) {
      ++r.fallback_scored;
      if (correct) ++r.fallback_correct;
    }
  }
  return r;
}

EvalReport evaluate(const std::vector<TaggedDocument>& results) {
  EvalReport total;
  for (const auto& doc : results) {
    std::vector<std::optional<int>> gold;
    gold.reserve(doc.tokens.size());
    for (const auto& t : doc.tokens) gold.push_back(t.token.gold);
    total += evaluate(doc.tokens, gold);
  }
  return total;
}

std::string render_report(const EvalReport& r, ReportFormat format) {
  if (format == ReportFormat::kStructured) {
    const auto fraction = [](const Ratio& ratio) -> nlohmann::ordered_json {
      if (const auto v = ratio.value()) return *v;
      return nullptr;
    };
    nlohmann::ordered_json out;
    out["n_open_class"] = r.n_open_class;
    out["n_unknown"] = r.n_unknown;
    out["n_unannotated"] = r.n_unannotated;
    out["n_mono"] = r.n_mono;
    out["n_poly"] = r.n_poly;
    out["correct_mono"] = r.correct_mono;
    out["correct_poly"] = r.correct_poly;
    out["accuracy_overall"] = fraction(r.accuracy_overall());
    out["accuracy_mono"] = fraction(r.accuracy_mono());
    out["accuracy_poly"] = fraction(r.accuracy_poly());
    out["poly_share"] = fraction(r.poly_share());
    out["fallback_count"] = r.fallback_count;
    out["fallback_scored"] = r.fallback_scored;
    out["fallback_correct"] = r.fallback_correct;
    return out.dump() + "\n";
  }

  const auto pct = [](const Ratio& ratio) {
    return ratio.defined() ? ratio.percent() + "%" : ratio.percent();
  };
  std::ostringstream out;
  out << "overall: " << pct(r.accuracy_overall())
      << " poly: " << pct(r.accuracy_poly())
      << " mono: " << pct(r.accuracy_mono())
      << " poly-share: " << pct(r.poly_share()) << '\n';
  out << "open-class: " << r.n_open_class << " unknown: " << r.n_unknown
      << " unannotated: " << r.n_unannotated << '\n';
  out << "mono: " << r.correct_mono << '/' << r.n_mono
      << " poly: " << r.correct_poly << '/' << r.n_poly << '\n';
  out << "fallback: " << r.fallback_count << " scored: " << r.fallback_scored
      << " correct: " << r.fallback_correct << '\n';
  return out.str();
}

}  // namespace homograph
