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

#include "homograph/corpus.h"

#include <charconv>
#include <fstream>
#include <set>
#include <string_view>

#include "homograph/error.h"

namespace homograph {

namespace {

constexpr std::string_view kDocHeader = "# doc:";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool absent(std::string_view field) { return field.empty() || field == "_"; }

}  // namespace

std::vector<Document> parse_corpus(std::istream& in, const std::string& source) {
  std::vector<Document> docs;
  std::set<std::string> ids;
  std::size_t n_tokens = 0;
  bool open = false;  // the last document still accepts tokens
  std::size_t line_no = 0;

  auto start_document = [&](std::optional<std::string> id) {
    Document doc;
    doc.doc_id = id ? *id : "doc-" + std::to_string(docs.size() + 1);
    if (!ids.insert(doc.doc_id).second) {
      throw DataError(source, line_no, "duplicate document id '" + doc.doc_id + "'");
    }
    docs.push_back(std::move(doc));
    open = true;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (open && !docs.back().tokens.empty()) open = false;
      continue;
    }

    const bool has_tab = line.find('\t') != std::string_view::npos;
    if (!has_tab && line.front() == '#') {
      if (line.substr(0, kDocHeader.size()) == kDocHeader) {
        auto id = line.substr(kDocHeader.size());
        const auto first = id.find_first_not_of(' ');
        id = first == std::string_view::npos ? std::string_view{} : id.substr(first);
        while (!id.empty() && id.back() == ' ') id.remove_suffix(1);
        if (id.empty()) throw DataError(source, line_no, "empty document id");
        start_document(std::string(id));
      }
      continue;
    }

    const auto fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 4) {
      throw DataError(source, line_no,
                      "expected 2 to 4 tab-separated fields, found " +
                          std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw DataError(source, line_no, "empty surface or tag field");
    }

    TaggedToken token;
    token.surface = fields[0];
    token.fine_tag = fields[1];
    token.line = line_no;
    if (fields.size() >= 3 && !absent(fields[2])) token.lemma = std::string(fields[2]);
    if (fields.size() == 4 && !absent(fields[3])) {
      int gold = 0;
      const auto f = fields[3];
      const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), gold);
      if (ec != std::errc() || end != f.data() + f.size() || gold < 1) {
        throw DataError(source, line_no,
                        "gold homograph id '" + std::string(f) +
                            "' is not a positive integer");
      }
      token.gold = gold;
    }

    if (!open) start_document(std::nullopt);
    auto& doc = docs.back();
    token.index = doc.tokens.size();
    doc.tokens.push_back(std::move(token));
    ++n_tokens;
  }

  if (n_tokens == 0) throw EmptyInputError(source, 0, "corpus has no tokens");
  return docs;
}

std::vector<Document> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_corpus(in, path.string());
}

}  // namespace homograph
