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

#ifndef HOMOGRAPH_LEXICON_H_
#define HOMOGRAPH_LEXICON_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace homograph {

// A broad grammatical category, e.g. "n" or "adj".
class CoarseTag {
 public:
  CoarseTag() = default;
  explicit CoarseTag(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  bool empty() const { return name_.empty(); }

  friend auto operator<=>(const CoarseTag&, const CoarseTag&) = default;

 private:
  std::string name_;
};

// Always a member of every vocabulary; never open class.
inline constexpr std::string_view kPunctTag = "punct";

// Closed set of coarse tags. Declared order is kept; the reserved punct tag
// is appended when the declaration does not list it.
class Vocabulary {
 public:
  // Throws DataError on an empty declaration or a repeated tag.
  explicit Vocabulary(const std::vector<std::string>& declared);

  // The shipped 17-category default.
  static const Vocabulary& builtin();

  // One tag per line; blank lines and '#' comments are skipped.
  static Vocabulary parse(std::istream& in, const std::string& source);
  static Vocabulary load(const std::filesystem::path& path);

  bool contains(std::string_view tag) const;
  const std::vector<CoarseTag>& tags() const { return tags_; }
  // The tags as declared, without the implicit punct.
  std::vector<CoarseTag> declared() const;

 private:
  std::vector<CoarseTag> tags_;
  std::unordered_set<std::string> index_;
  bool punct_implicit_ = false;
};

struct SenseEntry {
  int sense_id = 0;  // 1-based within the homograph
  std::string definition;
  // Fields other than "def", kept verbatim as JSON text.
  std::map<std::string, std::string> extra;

  friend bool operator==(const SenseEntry&, const SenseEntry&) = default;
};

struct Homograph {
  int homograph_id = 0;  // 1-based; position is frequency rank
  std::vector<CoarseTag> pos;  // non-empty, no repeats, source order
  std::vector<SenseEntry> senses;

  bool has_pos(const CoarseTag& tag) const;

  friend bool operator==(const Homograph&, const Homograph&) = default;
};

struct WordTypeEntry {
  std::string key;
  std::vector<Homograph> homographs;

  std::size_t sense_count() const;
  bool polyhomographic() const { return homographs.size() >= 2; }
  bool polysemous() const { return sense_count() >= 2; }

  friend bool operator==(const WordTypeEntry&, const WordTypeEntry&) = default;
};

// Word types in file order, indexed by normalized key. Immutable.
class Lexicon {
 public:
  Lexicon() = default;
  // Renumbers homograph and sense ids by position. Throws DataError on a
  // duplicate key or an empty homograph/sense list.
  explicit Lexicon(std::vector<WordTypeEntry> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<WordTypeEntry>& entries() const { return entries_; }

  // Exact key match; the key must already be normalized.
  const WordTypeEntry* find(std::string_view key) const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<WordTypeEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ASCII lowercasing. No stemming.
std::string normalize_key(std::string_view surface);

// One JSON record per line:
//   {"word": "run", "homographs": [{"pos": ["v"], "senses": [{"def": ...}]}]}
// Blank lines are skipped. Errors carry the 1-based line number.
Lexicon parse_lexicon(std::istream& in, const Vocabulary& vocabulary,
                      const std::string& source = "<lexicon>");
Lexicon load_lexicon(const std::filesystem::path& path,
                     const Vocabulary& vocabulary);

// Writes the line format accepted by parse_lexicon.
void write_lexicon(const Lexicon& lexicon, std::ostream& out);

// Entry keyed by normalize_key(surface), or nullptr.
const WordTypeEntry* lookup(const Lexicon& lexicon, std::string_view surface);

}  // namespace homograph

#endif  // HOMOGRAPH_LEXICON_H_
