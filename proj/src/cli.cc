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

#include "homograph/cli.h"

#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "homograph/corpus.h"
#include "homograph/error.h"
#include "homograph/eval.h"
#include "homograph/lexicon.h"
#include "homograph/pipeline.h"
#include "homograph/tagmap.h"
#include "homograph/taxonomy.h"

namespace homograph::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

Vocabulary load_vocabulary(const RunConfig& config) {
  if (config.vocabulary_path.empty()) return Vocabulary::builtin();
  return Vocabulary::load(config.vocabulary_path);
}

TagMapping load_mapping(const RunConfig& config, const Vocabulary& vocabulary) {
  if (config.tagmap_path.empty()) return builtin_tagmap(vocabulary);
  return load_tagmap(config.tagmap_path, vocabulary);
}

// Writes to path, or to out when path is empty.
void emit(const std::string& path, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing " + path);
}

struct Loaded {
  Vocabulary vocabulary;
  Lexicon lexicon;
  TagMapping mapping;
};

Loaded load_all(const RunConfig& config) {
  auto vocabulary = load_vocabulary(config);
  auto lexicon = load_lexicon(config.lexicon_path, vocabulary);
  auto mapping = load_mapping(config, vocabulary);
  return {std::move(vocabulary), std::move(lexicon), std::move(mapping)};
}

std::vector<TaggedDocument> tag_corpus_file(const RunConfig& config,
                                            const Loaded& loaded,
                                            bool allow_empty) {
  std::vector<Document> docs;
  try {
    docs = read_corpus(config.corpus_path);
  } catch (const EmptyInputError&) {
    if (!allow_empty) throw;
  }
  PipelineOptions options;
  options.strict = config.strict;
  options.skip_proper = config.skip_proper;
  try {
    return tag_corpus(loaded.lexicon, loaded.mapping, docs, options);
  } catch (const DataError& e) {
    throw DataError(config.corpus_path + ": " + e.what());
  }
}

void summarize(const std::vector<TaggedDocument>& results, std::ostream& err) {
  std::array<std::size_t, 4> by_status{};
  std::size_t n = 0;
  for (const auto& doc : results) {
    for (const auto& t : doc.tokens) {
      ++by_status[static_cast<std::size_t>(t.status)];
      ++n;
    }
  }
  err << "tagged " << n << " tokens in " << results.size() << " documents:";
  constexpr std::array<TokenStatus, 4> kOrder = {
      TokenStatus::kClosedClass, TokenStatus::kUnknownWord,
      TokenStatus::kMatched, TokenStatus::kFallback};
  for (const auto s : kOrder) {
    err << ' ' << status_code(s) << '=' << by_status[static_cast<std::size_t>(s)];
  }
  err << '\n';
}

// Maps exceptions onto exit statuses.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& /*out*/,
                 std::ostream& err) {
  return guarded(err, [&] {
    require(config.lexicon_path, "--lexicon");
    const auto vocabulary = load_vocabulary(config);
    const auto lexicon = load_lexicon(config.lexicon_path, vocabulary);
    std::size_t n_tags = 0;
    if (!config.tagmap_path.empty()) {
      n_tags = load_tagmap(config.tagmap_path, vocabulary).size();
    }
    if (!config.corpus_path.empty()) read_corpus(config.corpus_path);
    err << "ok: " << lexicon.size() << " word types";
    if (n_tags > 0) err << ", " << n_tags << " fine tags";
    err << '\n';
    return kOk;
  });
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require(config.lexicon_path, "--lexicon");
    const auto vocabulary = load_vocabulary(config);
    const auto lexicon = load_lexicon(config.lexicon_path, vocabulary);
    if (lexicon.empty()) {
      throw DataError(config.lexicon_path + ": lexicon has no word types");
    }
    const auto report = analyze_lexicon(lexicon);
    emit(config.report_path, out, [&](std::ostream& os) {
      os << render_taxonomy(report, config.report_format);
    });
    return kOk;
  });
}

int cmd_tag(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require(config.lexicon_path, "--lexicon");
    require(config.corpus_path, "--corpus");
    const auto loaded = load_all(config);
    const auto results = tag_corpus_file(config, loaded, /*allow_empty=*/true);
    emit(config.output_path, out,
         [&](std::ostream& os) { write_output(results, os); });
    summarize(results, err);
    return kOk;
  });
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require(config.lexicon_path, "--lexicon");
    require(config.corpus_path, "--corpus");
    const auto loaded = load_all(config);
    const auto results = tag_corpus_file(config, loaded, /*allow_empty=*/false);

    bool any_gold = false;
    for (const auto& doc : results) {
      for (const auto& t : doc.tokens) any_gold = any_gold || t.token.gold;
    }
    if (!any_gold) {
      throw DataError(config.corpus_path + ": corpus carries no gold annotations");
    }

    EvalReport report;
    try {
      report = evaluate(results);
    } catch (const DataError& e) {
      throw DataError(config.corpus_path + ": " + e.what());
    }
    if (!config.output_path.empty()) {
      emit(config.output_path, out,
           [&](std::ostream& os) { write_output(results, os); });
    }
    emit(config.report_path, out, [&](std::ostream& os) {
      os << render_report(report, config.report_format);
    });
    summarize(results, err);
    return kOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Homograph-level sense tagging from part-of-speech tags",
               "homograph-tagger"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  bool lenient = false;

  using Command = int (*)(const RunConfig&, std::ostream&, std::ostream&);
  const std::map<std::string, std::pair<const char*, Command>> commands = {
      {"validate", {"Check that the input files load cleanly", cmd_validate}},
      {"analyze", {"Classify every word type of the lexicon", cmd_analyze}},
      {"tag", {"Assign homographs to the tokens of a tagged corpus", cmd_tag}},
      {"eval", {"Tag a gold-annotated corpus and score it", cmd_eval}},
  };
  for (const auto& [name, spec] : commands) {
    auto* sub = app.add_subcommand(name, spec.first);
    sub->add_option("--lexicon", config.lexicon_path, "Lexicon file (JSON lines)");
    sub->add_option("--vocab", config.vocabulary_path, "Coarse tag vocabulary file");
    sub->add_option("--tagmap", config.tagmap_path, "Fine-to-coarse tag mapping file");
    sub->add_option("--corpus", config.corpus_path, "POS-tagged corpus");
    sub->add_option("--out", config.output_path, "Tagged output file");
    sub->add_option("--report", config.report_path, "Report file");
    sub->add_option("--report-format", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--lenient", lenient,
                  "Treat tokens with unmapped tags as closed class");
    sub->add_flag("--skip-proper", config.skip_proper,
                  "Do not sense-tag proper nouns");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kOk : kUsageError;
  }

  config.strict = !lenient;
  config.report_format = *parse_report_format(format);
  for (const auto& [name, spec] : commands) {
    if (app.got_subcommand(name)) return spec.second(config, out, err);
  }
  return kUsageError;
}

}  // namespace homograph::cli
