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

#ifndef HOMOGRAPH_RATIO_H_
#define HOMOGRAPH_RATIO_H_

#include <cstdint>
#include <optional>
#include <string>

namespace homograph {

// An exact count ratio. Reports keep numerator and denominator so that
// rendering never goes through a rounded floating-point value.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 0;

  bool defined() const { return den > 0; }

  // num / den, or nullopt for an empty denominator.
  std::optional<double> value() const;

  // Percentage with one decimal place, rounded half up, e.g. "83.3".
  // "n/a" when the denominator is zero.
  std::string percent() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

}  // namespace homograph

#endif  // HOMOGRAPH_RATIO_H_
