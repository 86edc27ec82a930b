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

#ifndef HOMOGRAPH_CLI_H_
#define HOMOGRAPH_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "homograph/report_format.h"

namespace homograph::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kUsageError = 2;

struct RunConfig {
  std::string lexicon_path;
  std::string vocabulary_path;  // empty: builtin 17-tag set
  std::string tagmap_path;      // empty: builtin Penn table
  std::string corpus_path;
  std::string output_path;  // empty: stdout
  std::string report_path;  // empty: stdout
  bool strict = true;
  bool skip_proper = false;
  ReportFormat report_format = ReportFormat::kText;
};

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_tag(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses "<subcommand> [options]" (args excludes the program name) and runs
// the subcommand. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace homograph::cli

#endif  // HOMOGRAPH_CLI_H_
