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

#ifndef HOMOGRAPH_TAXONOMY_H_
#define HOMOGRAPH_TAXONOMY_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "homograph/lexicon.h"
#include "homograph/ratio.h"
#include "homograph/report_format.h"

namespace homograph {

// How far a perfect part-of-speech tag can narrow a word type down to a
// single homograph.
enum class DisambCategory {
  kMonohomographic,   // one homograph; trivially resolved
  kGuaranteed,        // every applicable tag selects exactly one homograph
  kPossible,          // some tags select one homograph, others several
  kNoDisambiguation,  // every applicable tag selects several homographs
};

inline constexpr std::size_t kNumCategories = 4;

std::string_view category_name(DisambCategory category);

// Number of homographs whose pos list contains each tag, over the union of
// the entry's tags.
std::map<CoarseTag, int> tag_counts(const WordTypeEntry& entry);

DisambCategory classify_word_type(const WordTypeEntry& entry);

struct TaxonomyReport {
  std::int64_t n_word_types = 0;
  std::int64_t n_polysemous = 0;
  std::int64_t n_polyhomographic = 0;
  // Indexed by DisambCategory.
  std::array<std::int64_t, kNumCategories> category_counts{};

  Ratio polysemous_pct;
  Ratio polyhomographic_pct;
  Ratio guaranteed_pct_of_polyhomographic;
  // Guaranteed or possible.
  Ratio possible_pct_of_polyhomographic;
  // Monohomographic types count as resolved in the two all-type figures.
  Ratio guaranteed_pct_all_types;
  Ratio possible_pct_all_types;

  // Per tag: number of word types in which more than one homograph carries
  // the tag.
  std::map<CoarseTag, std::int64_t> collisions;

  std::int64_t count(DisambCategory c) const {
    return category_counts[static_cast<std::size_t>(c)];
  }
};

// Throws DataError on an empty lexicon.
TaxonomyReport analyze_lexicon(const Lexicon& lexicon);

std::string render_taxonomy(const TaxonomyReport& report, ReportFormat format);

}  // namespace homograph

#endif  // HOMOGRAPH_TAXONOMY_H_
