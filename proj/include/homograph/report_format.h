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

#ifndef HOMOGRAPH_REPORT_FORMAT_H_
#define HOMOGRAPH_REPORT_FORMAT_H_

#include <optional>
#include <string_view>

namespace homograph {

enum class ReportFormat { kText, kStructured };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::kText;
  if (s == "structured") return ReportFormat::kStructured;
  return std::nullopt;
}

}  // namespace homograph

#endif  // HOMOGRAPH_REPORT_FORMAT_H_
