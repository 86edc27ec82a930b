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

#include "homograph/taxonomy.h"

#include <algorithm>
#include <sstream>

#include "homograph/error.h"
#include "json.hpp"

namespace homograph {

std::string_view category_name(DisambCategory category) {
  switch (category) {
    case DisambCategory::kMonohomographic:
      return "monohomographic";
    case DisambCategory::kGuaranteed:
      return "guaranteed";
    case DisambCategory::kPossible:
      return "possible";
    case DisambCategory::kNoDisambiguation:
      return "none";
  }
  return "?";
}

std::map<CoarseTag, int> tag_counts(const WordTypeEntry& entry) {
  std::map<CoarseTag, int> counts;
  for (const auto& h : entry.homographs) {
    for (const auto& tag : h.pos) ++counts[tag];
  }
  return counts;
}

DisambCategory classify_word_type(const WordTypeEntry& entry) {
  if (entry.homographs.size() == 1) return DisambCategory::kMonohomographic;
  const auto counts = tag_counts(entry);
  const bool all_single = std::all_of(counts.begin(), counts.end(),
                                      [](const auto& c) { return c.second <= 1; });
  if (all_single) return DisambCategory::kGuaranteed;
  const bool all_shared = std::all_of(counts.begin(), counts.end(),
                                      [](const auto& c) { return c.second >= 2; });
  if (all_shared) return DisambCategory::kNoDisambiguation;
  return DisambCategory::kPossible;
}

TaxonomyReport analyze_lexicon(const Lexicon& lexicon) {
  if (lexicon.empty()) throw EmptyInputError("lexicon has no word types");

  TaxonomyReport r;
  for (const auto& entry : lexicon.entries()) {
    ++r.n_word_types;
    if (entry.polysemous()) ++r.n_polysemous;
    if (entry.polyhomographic()) ++r.n_polyhomographic;
    ++r.category_counts[static_cast<std::size_t>(classify_word_type(entry))];
    for (const auto& [tag, n] : tag_counts(entry)) {
      if (n >= 2) ++r.collisions[tag];
    }
  }

  const auto mono = r.count(DisambCategory::kMonohomographic);
  const auto guaranteed = r.count(DisambCategory::kGuaranteed);
  const auto possible = r.count(DisambCategory::kPossible);
  r.polysemous_pct = {r.n_polysemous, r.n_word_types};
  r.polyhomographic_pct = {r.n_polyhomographic, r.n_word_types};
  r.guaranteed_pct_of_polyhomographic = {guaranteed, r.n_polyhomographic};
  r.possible_pct_of_polyhomographic = {guaranteed + possible,
                                       r.n_polyhomographic};
  r.guaranteed_pct_all_types = {mono + guaranteed, r.n_word_types};
  r.possible_pct_all_types = {mono + guaranteed + possible, r.n_word_types};
  return r;
}

std::string render_taxonomy(const TaxonomyReport& r, ReportFormat format) {
  constexpr DisambCategory kAll[] = {
      DisambCategory::kMonohomographic, DisambCategory::kGuaranteed,
      DisambCategory::kPossible, DisambCategory::kNoDisambiguation};

  if (format == ReportFormat::kStructured) {
    nlohmann::ordered_json out;
    out["n_word_types"] = r.n_word_types;
    out["n_polysemous"] = r.n_polysemous;
    out["n_polyhomographic"] = r.n_polyhomographic;
    for (const auto c : kAll) {
      out["n_" + std::string(category_name(c))] = r.count(c);
    }
    const auto pct = [](const Ratio& ratio) -> nlohmann::ordered_json {
      if (!ratio.defined()) return nullptr;
      return std::stod(ratio.percent());
    };
    out["polysemous_pct"] = pct(r.polysemous_pct);
    out["polyhomographic_pct"] = pct(r.polyhomographic_pct);
    out["guaranteed_pct_of_polyhomographic"] =
        pct(r.guaranteed_pct_of_polyhomographic);
    out["possible_pct_of_polyhomographic"] =
        pct(r.possible_pct_of_polyhomographic);
    out["guaranteed_pct_all_types"] = pct(r.guaranteed_pct_all_types);
    out["possible_pct_all_types"] = pct(r.possible_pct_all_types);
    auto& collisions = out["collisions"] = nlohmann::ordered_json::object();
    for (const auto& [tag, n] : r.collisions) collisions[tag.name()] = n;
    return out.dump() + "\n";
  }

  std::ostringstream out;
  out << "word types: " << r.n_word_types << '\n'
      << "polysemous: " << r.n_polysemous << " (" << r.polysemous_pct.percent()
      << "%)\n"
      << "polyhomographic: " << r.n_polyhomographic << " ("
      << r.polyhomographic_pct.percent() << "%)\n";
  for (const auto c : kAll) {
    out << "  " << category_name(c) << ": " << r.count(c) << '\n';
  }
  out << "guaranteed (of polyhomographic): "
      << r.guaranteed_pct_of_polyhomographic.percent() << "%\n"
      << "possible (of polyhomographic): "
      << r.possible_pct_of_polyhomographic.percent() << "%\n"
      << "guaranteed (all types): " << r.guaranteed_pct_all_types.percent()
      << "%\n"
      << "possible (all types): " << r.possible_pct_all_types.percent()
      << "%\n";
  out << "collisions:";
  if (r.collisions.empty()) out << " none";
  for (const auto& [tag, n] : r.collisions) out << ' ' << tag.name() << '=' << n;
  out << '\n';
  return out.str();
}

}  // namespace homograph
