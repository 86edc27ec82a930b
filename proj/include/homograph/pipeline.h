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

#ifndef HOMOGRAPH_PIPELINE_H_
#define HOMOGRAPH_PIPELINE_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homograph/corpus.h"
#include "homograph/lexicon.h"
#include "homograph/tagmap.h"

namespace homograph {

enum class TokenStatus {
  kClosedClass,  // not open class, or unmapped in lenient mode
  kUnknownWord,  // open class, not in the lexicon
  kMatched,      // first homograph carrying the token's coarse tag
  kFallback,     // no homograph carries the tag; homograph 1 assigned
};

// C, U, M or F.
char status_code(TokenStatus status);

struct SenseTaggedToken {
  TaggedToken token;
  CoarseTag coarse_tag;  // empty when unmapped in lenient mode
  bool open_class = false;
  TokenStatus status = TokenStatus::kClosedClass;
  std::optional<int> homograph_id;
  bool polyhomographic = false;
  // Homographs of the looked-up word type; 0 when not looked up or unknown.
  int homograph_count = 0;
};

struct PipelineOptions {
  // Abort on an unmapped fine tag; otherwise treat the token as closed class.
  bool strict = true;
  // Treat proper-noun fine tags as closed class.
  bool skip_proper = false;
};

// Throws UnmappedTagError in strict mode.
SenseTaggedToken disambiguate_token(const Lexicon& lexicon,
                                    const TagMapping& mapping,
                                    const TaggedToken& token,
                                    const PipelineOptions& options = {});

// Throws DataError (with the token's source line) on the first unmapped
// tag in strict mode.
std::vector<SenseTaggedToken> tag_document(const Lexicon& lexicon,
                                           const TagMapping& mapping,
                                           const Document& doc,
                                           const PipelineOptions& options = {});

struct TaggedDocument {
  std::string doc_id;
  std::vector<SenseTaggedToken> tokens;
};

// Documents are tagged independently; output keeps input order.
std::vector<TaggedDocument> tag_corpus(const Lexicon& lexicon,
                                       const TagMapping& mapping,
                                       const std::vector<Document>& docs,
                                       const PipelineOptions& options = {});

inline constexpr std::string_view kOutputHeader = "#homograph-tagger v1";

// Header line, then per document a "# doc: <id>" line followed by
// INDEX<TAB>SURFACE<TAB>COARSE<TAB>STATUS<TAB>HOMOGRAPH_ID lines. Absent
// coarse tags and homograph ids are written as "_".
void write_output(const std::vector<TaggedDocument>& results, std::ostream& out);
void write_output(const std::vector<TaggedDocument>& results,
                  const std::filesystem::path& path);

// Demo-quality tagger: first coarse tag of homograph 1, or nullopt for an
// unknown word. Not used by tag_document.
std::optional<CoarseTag> baseline_pos_assign(const Lexicon& lexicon,
                                             std::string_view surface);

}  // namespace homograph

#endif  // HOMOGRAPH_PIPELINE_H_
