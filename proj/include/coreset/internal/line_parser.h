// Copyright 2026 The Coreset Authors
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

#ifndef CORESET_INTERNAL_LINE_PARSER_H_
#define CORESET_INTERNAL_LINE_PARSER_H_

#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace coreset::internal {

// A non-empty, comment-stripped input line.
struct Line {
  int number = 0;  // 1-based
  std::vector<absl::string_view> tokens;
};

inline std::vector<Line> SplitLines(absl::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++number;
    if (const size_t hash = raw.find('#'); hash != absl::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, absl::StrSplit(raw, absl::ByAnyChar(" \t\r"),
                                     absl::SkipEmpty())};
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline absl::Status LineError(const Line& line, absl::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line.number, ": ", message));
}

struct Header {
  bool is_signed = false;
  int n = 0;
};

// "graph <n>" or "signed <n>".
inline absl::StatusOr<Header> ParseHeader(const Line& line) {
  Header header;
  if (line.tokens.size() != 2 ||
      (line.tokens[0] != "graph" && line.tokens[0] != "signed")) {
    return LineError(line, "expected header 'graph <n>' or 'signed <n>'");
  }
  header.is_signed = line.tokens[0] == "signed";
  if (!absl::SimpleAtoi(line.tokens[1], &header.n) || header.n < 0) {
    return LineError(line, "malformed vertex count");
  }
  return header;
}

}  // namespace coreset::internal

#endif  // CORESET_INTERNAL_LINE_PARSER_H_
