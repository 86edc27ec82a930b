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

#ifndef HOMOGRAPH_CORPUS_H_
#define HOMOGRAPH_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "homograph/tagmap.h"

namespace homograph {

struct TaggedToken {
  std::size_t index = 0;  // position within the document
  std::string surface;
  FineTag fine_tag;
  std::optional<std::string> lemma;  // overrides surface for lookup
  std::optional<int> gold;           // annotated homograph id
  std::size_t line = 0;              // source line, 0 if synthesized
};

struct Document {
  std::string doc_id;
  std::vector<TaggedToken> tokens;
};

// One token per line: SURFACE<TAB>FINE[<TAB>LEMMA[<TAB>GOLD]], with "_" for
// an absent lemma or gold id. A blank line ends a document; "# doc: <id>"
// names the next one. Other lines starting with '#' and holding no tab are
// comments. Unnamed documents get "doc-<ordinal>".
//
// Throws DataError with a line number on malformed lines, and
// EmptyInputError when the input holds no tokens.
std::vector<Document> parse_corpus(std::istream& in,
                                   const std::string& source = "<corpus>");
std::vector<Document> read_corpus(const std::filesystem::path& path);

}  // namespace homograph

#endif  // HOMOGRAPH_CORPUS_H_
