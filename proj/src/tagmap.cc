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

#include "homograph/tagmap.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "builtin_data.h"

namespace homograph {

namespace {

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(std::move(w));
  return out;
}

bool has_space(std::string_view s) {
  return s.find_first_of(" \r\n\v\f") != std::string_view::npos;
}

}  // namespace

TagMapping::TagMapping(FineTagMap entries, std::set<CoarseTag> open,
                       std::set<FineTag> proper)
    : entries_(std::move(entries)),
      open_(std::move(open)),
      proper_(std::move(proper)) {
  if (open_.count(CoarseTag(std::string(kPunctTag)))) {
    throw DataError("punct cannot be open class");
  }
}

const TagMapping& TagMapping::builtin() {
  static const TagMapping mapping = builtin_tagmap(Vocabulary::builtin());
  return mapping;
}

const CoarseTag* TagMapping::find(std::string_view fine) const {
  const auto it = entries_.find(fine);
  return it == entries_.end() ? nullptr : &it->second;
}

const CoarseTag& TagMapping::map(std::string_view fine) const {
  if (const auto* coarse = find(fine)) return *coarse;
  throw UnmappedTagError(FineTag(fine));
}

TagMapping parse_tagmap(std::istream& in, const Vocabulary& vocabulary,
                        const std::string& source) {
  TagMapping::FineTagMap entries;
  std::set<CoarseTag> open = {CoarseTag("n"), CoarseTag("v"), CoarseTag("adj"),
                              CoarseTag("adv")};
  std::set<FineTag> proper = {"NNP", "NNPS"};
  bool open_declared = false;
  bool proper_declared = false;
  std::size_t open_line = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    const auto tab = line.find('\t');
    const bool pair = tab != std::string::npos && tab > 0 &&
                      line.find('\t', tab + 1) == std::string::npos &&
                      !has_space(line.substr(0, tab)) &&
                      !has_space(line.substr(tab + 1)) && tab + 1 < line.size();

    if (line.front() == '#' && !pair) continue;

    if (line.front() == '!') {
      const auto colon = line.find(':');
      const auto key = line.substr(1, colon == std::string::npos
                                          ? std::string::npos
                                          : colon - 1);
      if (colon == std::string::npos || (key != "open" && key != "proper")) {
        throw DataError(source, line_no, "unknown header line '" + line + "'");
      }
      const auto values = split_words(std::string_view(line).substr(colon + 1));
      if (key == "open") {
        if (open_declared) {
          throw DataError(source, line_no, "open-class header repeated");
        }
        open_declared = true;
        open_line = line_no;
        open.clear();
        for (const auto& v : values) {
          if (!vocabulary.contains(v)) {
            throw DataError(source, line_no,
                            "unknown coarse tag '" + v + "' in open-class set");
          }
          open.emplace(v);
        }
      } else {
        if (proper_declared) {
          throw DataError(source, line_no, "proper-noun header repeated");
        }
        proper_declared = true;
        proper = std::set<FineTag>(values.begin(), values.end());
      }
      continue;
    }

    if (!pair) {
      throw DataError(source, line_no, "expected FINE<TAB>COARSE");
    }
    FineTag fine = line.substr(0, tab);
    const std::string coarse = line.substr(tab + 1);
    if (!vocabulary.contains(coarse)) {
      throw DataError(source, line_no,
                      "fine tag '" + fine + "' maps to unknown coarse tag '" +
                          coarse + "'");
    }
    if (entries.count(fine)) {
      throw DataError(source, line_no, "duplicate fine tag '" + fine + "'");
    }
    entries.emplace(std::move(fine), CoarseTag(coarse));
  }

  if (entries.empty()) {
    throw EmptyInputError(source, 0, "tag mapping has no entries");
  }
  try {
    return TagMapping(std::move(entries), std::move(open), std::move(proper));
  } catch (const DataError& e) {
    throw DataError(source, open_line, e.what());
  }
}

TagMapping load_tagmap(const std::filesystem::path& path,
                       const Vocabulary& vocabulary) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_tagmap(in, vocabulary, path.string());
}

TagMapping builtin_tagmap(const Vocabulary& vocabulary) {
  std::istringstream in{std::string(internal::kBuiltinTagmap)};
  return parse_tagmap(in, vocabulary, "<builtin tagmap>");
}

}  // namespace homograph
