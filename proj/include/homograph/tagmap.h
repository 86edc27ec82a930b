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

#ifndef HOMOGRAPH_TAGMAP_H_
#define HOMOGRAPH_TAGMAP_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "homograph/error.h"
#include "homograph/lexicon.h"

namespace homograph {

// A tagger-output tag, e.g. "NNS".
using FineTag = std::string;

class UnmappedTagError : public DataError {
 public:
  explicit UnmappedTagError(const FineTag& tag)
      : DataError("unmapped fine tag '" + tag + "'"), tag_(tag) {}

  const FineTag& tag() const { return tag_; }

 private:
  FineTag tag_;
};

// Total function from a fine tag set onto a coarse vocabulary.
class TagMapping {
 public:
  using FineTagMap = std::map<FineTag, CoarseTag, std::less<>>;

  TagMapping(FineTagMap entries, std::set<CoarseTag> open,
             std::set<FineTag> proper);

  // The shipped Penn Treebank table over the builtin vocabulary.
  static const TagMapping& builtin();

  // Throws UnmappedTagError.
  const CoarseTag& map(std::string_view fine) const;
  const CoarseTag* find(std::string_view fine) const;

  bool is_open_class(const CoarseTag& coarse) const {
    return open_.count(coarse) > 0;
  }
  bool is_proper(std::string_view fine) const {
    return proper_.count(std::string(fine)) > 0;
  }

  std::size_t size() const { return entries_.size(); }
  const FineTagMap& entries() const { return entries_; }
  const std::set<CoarseTag>& open_class() const { return open_; }
  const std::set<FineTag>& proper() const { return proper_; }

 private:
  FineTagMap entries_;
  std::set<CoarseTag> open_;
  std::set<FineTag> proper_;
};

// Lines are FINE<TAB>COARSE. Header lines:
//   !open: n v adj adv      (default when absent)
//   !proper: NNP NNPS       (default when absent)
// A line starting with '#' that is not a FINE<TAB>COARSE pair is a comment;
// "#<TAB>punct" maps the Penn '#' tag.
TagMapping parse_tagmap(std::istream& in, const Vocabulary& vocabulary,
                        const std::string& source = "<tagmap>");
TagMapping load_tagmap(const std::filesystem::path& path,
                       const Vocabulary& vocabulary);

// The shipped table validated against another vocabulary.
TagMapping builtin_tagmap(const Vocabulary& vocabulary);

inline const CoarseTag& map_tag(const TagMapping& mapping,
                                std::string_view fine) {
  return mapping.map(fine);
}

inline bool is_open_class(const TagMapping& mapping, const CoarseTag& coarse) {
  return mapping.is_open_class(coarse);
}

}  // namespace homograph

#endif  // HOMOGRAPH_TAGMAP_H_
