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

#ifndef HOMOGRAPH_ERROR_H_
#define HOMOGRAPH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homograph {

// Malformed or inconsistent input data. Maps to exit status 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}

  // line is 1-based; 0 means "no line information".
  DataError(const std::string& source, std::size_t line,
            const std::string& what)
      : std::runtime_error(Format(source, line, what)), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  static std::string Format(const std::string& source, std::size_t line,
                            const std::string& what) {
    std::string out = source;
    if (line > 0) {
      out += out.empty() ? "line " : ":";
      out += std::to_string(line);
    }
    if (!out.empty()) out += ": ";
    return out + what;
  }

  std::size_t line_ = 0;
};

// The input holds no records at all.
class EmptyInputError : public DataError {
 public:
  using DataError::DataError;
};

// A file could not be opened, read or written. Maps to exit status 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homograph

#endif  // HOMOGRAPH_ERROR_H_
