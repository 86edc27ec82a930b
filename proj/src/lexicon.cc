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

#include "homograph/lexicon.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "builtin_data.h"
#include "homograph/error.h"
#include "json.hpp"

namespace homograph {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

Vocabulary::Vocabulary(const std::vector<std::string>& declared) {
  if (declared.empty()) throw DataError("vocabulary declares no tags");
  for (const auto& tag : declared) {
    if (tag.empty()) throw DataError("empty coarse tag in vocabulary");
    if (!index_.insert(tag).second) {
      throw DataError("coarse tag '" + tag + "' declared twice");
    }
    tags_.emplace_back(tag);
  }
  if (index_.insert(std::string(kPunctTag)).second) {
    tags_.emplace_back(std::string(kPunctTag));
    punct_implicit_ = true;
  }
}

const Vocabulary& Vocabulary::builtin() {
  static const Vocabulary vocabulary = [] {
    std::istringstream in{std::string(internal::kBuiltinVocabulary)};
    return parse(in, "<builtin vocabulary>");
  }();
  return vocabulary;
}

Vocabulary Vocabulary::parse(std::istream& in, const std::string& source) {
  std::vector<std::string> declared;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (body.find_first_of(" \t") != std::string_view::npos) {
      throw DataError(source, line_no, "expected one coarse tag per line");
    }
    if (!seen.emplace(body).second) {
      throw DataError(source, line_no,
                      "coarse tag '" + std::string(body) + "' declared twice");
    }
    declared.emplace_back(body);
  }
  if (declared.empty()) {
    throw EmptyInputError(source, 0, "vocabulary declares no tags");
  }
  return Vocabulary(declared);
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse(in, path.string());
}

bool Vocabulary::contains(std::string_view tag) const {
  return index_.count(std::string(tag)) > 0;
}

std::vector<CoarseTag> Vocabulary::declared() const {
  std::vector<CoarseTag> out = tags_;
  if (punct_implicit_) out.pop_back();
  return out;
}

bool Homograph::has_pos(const CoarseTag& tag) const {
  return std::find(pos.begin(), pos.end(), tag) != pos.end();
}

std::size_t WordTypeEntry::sense_count() const {
  std::size_t n = 0;
  for (const auto& h : homographs) n += h.senses.size();
  return n;
}

Lexicon::Lexicon(std::vector<WordTypeEntry> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& entry = entries_[i];
    if (entry.key.empty()) throw DataError("empty word-type key");
    if (entry.homographs.empty()) {
      throw DataError("word type '" + entry.key + "' has no homographs");
    }
    for (std::size_t h = 0; h < entry.homographs.size(); ++h) {
      auto& homograph = entry.homographs[h];
      homograph.homograph_id = static_cast<int>(h + 1);
      if (homograph.pos.empty() || homograph.senses.empty()) {
        throw DataError("word type '" + entry.key + "' homograph " +
                        std::to_string(h + 1) +
                        " has an empty pos or sense list");
      }
      for (std::size_t s = 0; s < homograph.senses.size(); ++s) {
        homograph.senses[s].sense_id = static_cast<int>(s + 1);
      }
    }
    if (!index_.emplace(entry.key, i).second) {
      throw DataError("duplicate word-type key '" + entry.key + "'");
    }
  }
}

const WordTypeEntry* Lexicon::find(std::string_view key) const {
  const auto it = index_.find(std::string(key));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::string normalize_key(std::string_view surface) {
  std::string key(surface);
  for (auto& c : key) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return key;
}

Lexicon parse_lexicon(std::istream& in, const Vocabulary& vocabulary,
                      const std::string& source) {
  std::vector<WordTypeEntry> entries;
  std::unordered_map<std::string, std::size_t> first_seen;
  std::string line;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& what) -> DataError {
    return DataError(source, line_no, what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw fail(std::string("malformed record: ") + e.what());
    }
    if (!record.is_object()) throw fail("record is not an object");

    const auto word = record.find("word");
    if (word == record.end() || !word->is_string()) {
      throw fail("record lacks a string 'word' field");
    }
    WordTypeEntry entry;
    entry.key = normalize_key(word->get<std::string>());
    if (entry.key.empty()) throw fail("empty 'word' field");

    const auto homographs = record.find("homographs");
    if (homographs == record.end() || !homographs->is_array()) {
      throw fail("word '" + entry.key + "' lacks a 'homographs' array");
    }
    if (homographs->empty()) {
      throw fail("word '" + entry.key + "' has an empty homograph list");
    }

    for (const auto& h : *homographs) {
      const std::string where = "word '" + entry.key + "' homograph " +
                                std::to_string(entry.homographs.size() + 1);
      if (!h.is_object()) throw fail(where + " is not an object");
      Homograph homograph;

      const auto pos = h.find("pos");
      if (pos == h.end() || !pos->is_array()) {
        throw fail(where + " lacks a 'pos' array");
      }
      if (pos->empty()) throw fail(where + " has an empty pos list");
      for (const auto& tag : *pos) {
        if (!tag.is_string()) throw fail(where + " has a non-string pos tag");
        const auto name = tag.get<std::string>();
        if (!vocabulary.contains(name)) {
          throw fail(where + ": unknown coarse tag '" + name + "'");
        }
        CoarseTag coarse(name);
        if (homograph.has_pos(coarse)) {
          throw fail(where + ": pos tag '" + name + "' repeated");
        }
        homograph.pos.push_back(std::move(coarse));
      }

      const auto senses = h.find("senses");
      if (senses == h.end() || !senses->is_array()) {
        throw fail(where + " lacks a 'senses' array");
      }
      if (senses->empty()) throw fail(where + " has an empty sense list");
      for (const auto& s : *senses) {
        if (!s.is_object()) throw fail(where + " has a non-object sense");
        const auto def = s.find("def");
        if (def == s.end() || !def->is_string()) {
          throw fail(where + " has a sense without a string 'def'");
        }
        SenseEntry sense;
        sense.definition = def->get<std::string>();
        for (const auto& [k, v] : s.items()) {
          if (k != "def") sense.extra.emplace(k, v.dump());
        }
        homograph.senses.push_back(std::move(sense));
      }
      entry.homographs.push_back(std::move(homograph));
    }

    const auto [it, inserted] = first_seen.emplace(entry.key, line_no);
    if (!inserted) {
      throw fail("duplicate word-type key '" + entry.key +
                 "' (first defined on line " + std::to_string(it->second) +
                 ")");
    }
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(entries));
}

Lexicon load_lexicon(const std::filesystem::path& path,
                     const Vocabulary& vocabulary) {
  auto in = open_input(path);
  return parse_lexicon(in, vocabulary, path.string());
}

void write_lexicon(const Lexicon& lexicon, std::ostream& out) {
  for (const auto& entry : lexicon.entries()) {
    json homographs = json::array();
    for (const auto& h : entry.homographs) {
      json pos = json::array();
      for (const auto& tag : h.pos) pos.push_back(tag.name());
      json senses = json::array();
      for (const auto& s : h.senses) {
        json sense = {{"def", s.definition}};
        for (const auto& [k, v] : s.extra) sense[k] = json::parse(v);
        senses.push_back(std::move(sense));
      }
      homographs.push_back({{"pos", std::move(pos)}, {"senses", std::move(senses)}});
    }
    json record = {{"word", entry.key}, {"homographs", std::move(homographs)}};
    out << record.dump() << '\n';
  }
}

const WordTypeEntry* lookup(const Lexicon& lexicon, std::string_view surface) {
  if (surface.empty()) return nullptr;
  return lexicon.find(normalize_key(surface));
}

}  // namespace homograph
