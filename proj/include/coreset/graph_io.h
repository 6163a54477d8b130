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

#ifndef CORESET_GRAPH_IO_H_
#define CORESET_GRAPH_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

#include "coreset/graph.h"

namespace coreset {

// Edge-list text format:
//
//   graph <n>            signed <n>
//   u v w                u v c+ c-
//
// Tokens are whitespace separated; blank lines and '#' comments are skipped.
// Weights are written with 17 significant digits so a write/read cycle is
// exact.
absl::StatusOr<AnyGraph> ParseEdgeList(absl::string_view text);
std::string FormatEdgeList(const Graph& g);
std::string FormatEdgeList(const SignedGraph& g);

absl::StatusOr<AnyGraph> ReadEdgeList(const std::string& path);
absl::Status WriteEdgeList(const Graph& g, const std::string& path);
absl::Status WriteEdgeList(const SignedGraph& g, const std::string& path);

// File helpers shared by the readers and the CLI. Errors are kNotFound or
// kUnavailable so callers can map them to I/O failures.
absl::StatusOr<std::string> ReadFileToString(const std::string& path);
absl::Status WriteStringToFile(absl::string_view contents,
                               const std::string& path);

// Shortest form with at least 15 significant digits that reads back exactly.
std::string FormatDouble(double x);

}  // namespace coreset

#endif  // CORESET_GRAPH_IO_H_
