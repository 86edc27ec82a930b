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

#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "homograph/error.h"
#include "homograph/lexicon.h"
#include "test_util.h"

namespace homograph {
namespace {

Lexicon parse(const std::string& text,
              const Vocabulary& vocabulary = Vocabulary::builtin()) {
  std::istringstream in(text);
  return parse_lexicon(in, vocabulary, "test.jsonl");
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("builtin vocabulary has 17 categories plus punct") {
  const auto& v = Vocabulary::builtin();
  CHECK(v.declared().size() == 17);
  CHECK(v.tags().size() == 18);
  for (const char* t : {"n", "v", "adj", "adv", "pron", "conj", "prep",
                        "interj", "det", "punct"}) {
    CHECK_MESSAGE(v.contains(t), t);
  }
  CHECK_FALSE(v.contains("xx"));
}

TEST_CASE("vocabulary file format") {
  std::istringstream in("# tags\nn\n\nv  \n# more\nadj\n");
  const auto v = Vocabulary::parse(in, "vocab");
  CHECK(v.declared().size() == 3);
  CHECK(v.contains("punct"));

  std::istringstream dup("n\nv\nn\n");
  CHECK_THROWS_WITH_AS(Vocabulary::parse(dup, "vocab"),
                       doctest::Contains("vocab:3"), DataError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(Vocabulary::parse(empty, "vocab"), EmptyInputError);
  std::istringstream two("n v\n");
  CHECK_THROWS_AS(Vocabulary::parse(two, "vocab"), DataError);
}

TEST_CASE("load a single record") {
  const auto lex = parse(
      R"({"word":"run","homographs":[{"pos":["v"],"senses":[{"def":"move fast"},{"def":"manage"}]},{"pos":["n"],"senses":[{"def":"an act of running"}]}]})"
      "\n");
  REQUIRE(lex.size() == 1);
  const auto& e = lex.entries()[0];
  CHECK(e.key == "run");
  REQUIRE(e.homographs.size() == 2);
  CHECK(e.homographs[0].homograph_id == 1);
  CHECK(e.homographs[1].homograph_id == 2);
  CHECK(e.homographs[0].pos == std::vector<CoarseTag>{CoarseTag("v")});
  CHECK(e.homographs[0].senses[1].sense_id == 2);
  CHECK(e.homographs[0].senses[1].definition == "manage");
  CHECK(e.sense_count() == 3);
}

TEST_CASE("load errors name the line") {
  const std::string ok =
      R"({"word":"a","homographs":[{"pos":["n"],"senses":[{"def":"x"}]}]})";
  CHECK(error_of(ok + "\n" +
                 R"({"word":"b","homographs":[{"pos":["xx"],"senses":[{"def":"x"}]}]})") ==
        "test.jsonl:2: word 'b' homograph 1: unknown coarse tag 'xx'");

  const std::string bank =
      R"({"word":"bank","homographs":[{"pos":["n"],"senses":[{"def":"x"}]}]})";
  const std::string dup = error_of(bank + "\n\n" + bank + "\n");
  CHECK(dup.find("test.jsonl:3") != std::string::npos);
  CHECK(dup.find("duplicate word-type key 'bank'") != std::string::npos);

  // Keys collide after case normalization.
  CHECK(error_of(bank + "\n" +
                 R"({"word":"Bank","homographs":[{"pos":["v"],"senses":[{"def":"x"}]}]})")
            .find("duplicate") != std::string::npos);

  CHECK(error_of(R"({"word":"a","homographs":[]})").find("empty homograph list") !=
        std::string::npos);
  CHECK(error_of(R"({"word":"a","homographs":[{"pos":["n"],"senses":[]}]})")
            .find("empty sense list") != std::string::npos);
  CHECK(error_of(R"({"word":"a","homographs":[{"pos":[],"senses":[{"def":"x"}]}]})")
            .find("empty pos list") != std::string::npos);
  CHECK(error_of(R"({"word":"a","homographs":[{"pos":["n","n"],"senses":[{"def":"x"}]}]})")
            .find("repeated") != std::string::npos);
  CHECK(error_of(R"({"word":"a","homographs":[{"pos":["n"],"senses":[{"gloss":"x"}]}]})")
            .find("def") != std::string::npos);
  CHECK(error_of("{not json}").rfind("test.jsonl:1: malformed record", 0) == 0);
  CHECK(error_of(R"(["a"])").find("not an object") != std::string::npos);
  CHECK(error_of(R"({"word":"","homographs":[]})").find("empty 'word'") !=
        std::string::npos);
  CHECK(error_of(R"({"homographs":[]})").find("'word'") != std::string::npos);
}

TEST_CASE("lexicon constructor enforces invariants") {
  auto e = testing::make_entry("bank", {{"n"}});
  CHECK_THROWS_AS(Lexicon({e, e}), DataError);
  WordTypeEntry empty{"x", {}};
  CHECK_THROWS_AS(Lexicon({empty}), DataError);
}

TEST_CASE("missing file is an io error") {
  CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.jsonl", Vocabulary::builtin()),
                  IoError);
}

TEST_CASE("lookup normalizes case only") {
  const auto lex = Lexicon({testing::make_entry("bank", {{"n"}, {"v"}}),
                            testing::make_entry("walk", {{"v"}})});
  const auto* bank = lookup(lex, "Bank");
  REQUIRE(bank != nullptr);
  CHECK(bank->key == "bank");
  CHECK(lookup(lex, "BANK") == bank);
  CHECK(lookup(lex, "walked") == nullptr);
  CHECK(lookup(lex, "") == nullptr);
  CHECK(normalize_key("Ab-C") == "ab-c");
}

TEST_CASE("opaque sense fields survive a round trip") {
  const auto lex = parse(
      R"({"word":"bank","homographs":[{"pos":["n","v"],"senses":[{"def":"x","example":"the river bank","codes":[1,2]}]}]})");
  const auto& sense = lex.entries()[0].homographs[0].senses[0];
  CHECK(sense.extra.at("example") == "\"the river bank\"");
  CHECK(sense.extra.at("codes") == "[1,2]");
  std::ostringstream out;
  write_lexicon(lex, out);
  CHECK(parse(out.str()) == lex);
}

TEST_CASE("round trip over random lexicons") {
  std::mt19937 rng(7);
  const auto& tags = Vocabulary::builtin().declared();
  for (int round = 0; round < 200; ++round) {
    std::vector<WordTypeEntry> entries;
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int i = 0; i < n; ++i) {
      auto e = testing::entry_from_masks(testing::random_masks(rng, 17, 5), tags);
      e.key = "w" + std::to_string(i);
      for (auto& h : e.homographs) {
        const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int s = 0; s < extra; ++s) {
          h.senses.push_back({0, "def \"quoted\" é " + std::to_string(s), {}});
        }
      }
      entries.push_back(std::move(e));
    }
    const Lexicon lex(std::move(entries));
    std::ostringstream out;
    write_lexicon(lex, out);
    const auto again = parse(out.str());
    REQUIRE(again == lex);
  }
}

TEST_CASE("fixture lexicon loads in file order") {
  const auto lex =
      load_lexicon(testing::data_dir() / "fixture.lexicon.jsonl", Vocabulary::builtin());
  CHECK(lex.size() == 51);
  CHECK(lex.entries().front().key == "bank");
  CHECK(lex.entries().back().key == "trading");
  const auto* sound = lookup(lex, "sound");
  REQUIRE(sound != nullptr);
  CHECK(sound->homographs[1].pos ==
        std::vector<CoarseTag>{CoarseTag("adj"), CoarseTag("adv")});
}

}  // namespace
}  // namespace homograph
