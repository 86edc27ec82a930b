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

#include "homograph/pipeline.h"

#include <fstream>
#include <ostream>

#include "homograph/error.h"

namespace homograph {

char status_code(TokenStatus status) {
  switch (status) {
    case TokenStatus::kClosedClass:
      return 'C';
    case TokenStatus::kUnknownWord:
      return 'U';
    case TokenStatus::kMatched:
      return 'M';
    case TokenStatus::kFallback:
      return 'F';
  }
  return '?';
}

SenseTaggedToken disambiguate_token(const Lexicon& lexicon,
                                    const TagMapping& mapping,
                                    const TaggedToken& token,
                                    const PipelineOptions& options) {
  SenseTaggedToken out;
  out.token = token;

  const CoarseTag* coarse = mapping.find(token.fine_tag);
  if (coarse == nullptr) {
    if (options.strict) throw UnmappedTagError(token.fine_tag);
    return out;
  }
  out.coarse_tag = *coarse;
  out.open_class = mapping.is_open_class(*coarse) &&
                   !(options.skip_proper && mapping.is_proper(token.fine_tag));
  if (!out.open_class) return out;

  const WordTypeEntry* entry =
      lookup(lexicon, token.lemma ? *token.lemma : token.surface);
  if (entry == nullptr) {
    out.status = TokenStatus::kUnknownWord;
    return out;
  }
  out.homograph_count = static_cast<int>(entry->homographs.size());
  out.polyhomographic = entry->polyhomographic();

  for (const auto& h : entry->homographs) {
    if (h.has_pos(*coarse)) {
      out.status = TokenStatus::kMatched;
      out.homograph_id = h.homograph_id;
      return out;
    }
  }
  out.status = TokenStatus::kFallback;
  out.homograph_id = 1;
  return out;
}

std::vector<SenseTaggedToken> tag_document(const Lexicon& lexicon,
                                           const TagMapping& mapping,
                                           const Document& doc,
                                           const PipelineOptions& options) {
  std::vector<SenseTaggedToken> out;
  out.reserve(doc.tokens.size());
  for (const auto& token : doc.tokens) {
    try {
      out.push_back(disambiguate_token(lexicon, mapping, token, options));
    } catch (const UnmappedTagError& e) {
      throw DataError("", token.line,
                      std::string(e.what()) + " in document '" + doc.doc_id + "'");
    }
  }
  return out;
}

std::vector<TaggedDocument> tag_corpus(const Lexicon& lexicon,
                                       const TagMapping& mapping,
                                       const std::vector<Document>& docs,
                                       const PipelineOptions& options) {
  std::vector<TaggedDocument> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) {
    out.push_back({doc.doc_id, tag_document(lexicon, mapping, doc, options)});
  }
  return out;
}

void write_output(const std::vector<TaggedDocument>& results, std::ostream& out) {
  out << kOutputHeader << '\n';
  for (const auto& doc : results) {
    out << "# doc: " << doc.doc_id << '\n';
    for (const auto& t : doc.tokens) {
      out << t.token.index << '\t' << t.token.surface << '\t'
          << (t.coarse_tag.empty() ? "_" : t.coarse_tag.name()) << '\t'
          << status_code(t.status) << '\t';
      if (t.homograph_id) {
        out << *t.homograph_id;
      } else {
        out << '_';
      }
      out << '\n';
    }
  }
}

void write_output(const std::vector<TaggedDocument>& results,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_output(results, out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::optional<CoarseTag> baseline_pos_assign(const Lexicon& lexicon,
                                             std::string_view surface) {
  const WordTypeEntry* entry = lookup(lexicon, surface);
  if (entry == nullptr) return std::nullopt;
  return entry->homographs.front().pos.front();
}

}  // namespace homograph
