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

#include "coreset/graph_io.h"

#include <fstream>
#include <sstream>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

#include "coreset/internal/line_parser.h"

namespace coreset {

using internal::LineError;
using internal::ParseHeader;
using internal::SplitLines;

absl::StatusOr<AnyGraph> ParseEdgeList(absl::string_view text) {
  const std::vector<internal::Line> lines = SplitLines(text);
  if (lines.empty()) return absl::InvalidArgumentError("empty edge list");
  auto header = ParseHeader(lines.front());
  if (!header.ok()) return header.status();
  const int n = header->n;

  if (!header->is_signed) {
    std::vector<Edge> edges;
    for (size_t k = 1; k < lines.size(); ++k) {
      const internal::Line& line = lines[k];
      if (line.tokens.size() != 3) {
        return LineError(line, "expected 'u v w'");
      }
      Edge e;
      if (!absl::SimpleAtoi(line.tokens[0], &e.u) ||
          !absl::SimpleAtoi(line.tokens[1], &e.v) ||
          !absl::SimpleAtod(line.tokens[2], &e.w)) {
        return LineError(line, "malformed number");
      }
      if (auto status = ValidateEdge(n, e); !status.ok()) {
        return LineError(line, status.message());
      }
      edges.push_back(e);
    }
    auto g = Graph::Create(n, std::move(edges));
    if (!g.ok()) return g.status();
    return AnyGraph(*std::move(g));
  }

  std::vector<SignedEdge> edges;
  for (size_t k = 1; k < lines.size(); ++k) {
    const internal::Line& line = lines[k];
    if (line.tokens.size() != 4) {
      return LineError(line, "expected 'u v c+ c-'");
    }
    SignedEdge e;
    if (!absl::SimpleAtoi(line.tokens[0], &e.u) ||
        !absl::SimpleAtoi(line.tokens[1], &e.v) ||
        !absl::SimpleAtod(line.tokens[2], &e.c_plus) ||
        !absl::SimpleAtod(line.tokens[3], &e.c_minus)) {
      return LineError(line, "malformed number");
    }
    if (auto status = ValidateSignedEdge(n, e, /*unit_range=*/true);
        !status.ok()) {
      return LineError(line, status.message());
    }
    edges.push_back(e);
  }
  auto g = SignedGraph::Create(n, std::move(edges));
  if (!g.ok()) return g.status();
  return AnyGraph(*std::move(g));
}

std::string FormatDouble(double x) {
  for (int precision = 15; precision < 17; ++precision) {
    std::string text = absl::StrFormat("%.*g", precision, x);
    double back = 0.0;
    if (absl::SimpleAtod(text, &back) && back == x) return text;
  }
  return absl::StrFormat("%.17g", x);
}

std::string FormatEdgeList(const Graph& g) {
  std::string out = absl::StrCat("graph ", g.num_vertices(), "\n");
  for (const Edge& e : g.edges()) {
    absl::StrAppend(&out, e.u, " ", e.v, " ", FormatDouble(e.w), "\n");
  }
  return out;
}

std::string FormatEdgeList(const SignedGraph& g) {
  std::string out = absl::StrCat("signed ", g.num_vertices(), "\n");
  for (const SignedEdge& e : g.edges()) {
    absl::StrAppend(&out, e.u, " ", e.v, " ", FormatDouble(e.c_plus), " ",
                    FormatDouble(e.c_minus), "\n");
  }
  return out;
}

absl::StatusOr<std::string> ReadFileToString(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return absl::UnavailableError(absl::StrCat("read failed: ", path));
  return buffer.str();
}

absl::Status WriteStringToFile(absl::string_view contents,
                               const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(absl::StrCat("cannot write ", path));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) return absl::UnavailableError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<AnyGraph> ReadEdgeList(const std::string& path) {
  auto text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  auto graph = ParseEdgeList(*text);
  if (!graph.ok()) {
    return absl::Status(graph.status().code(),
                        absl::StrCat(path, ": ", graph.status().message()));
  }
  return graph;
}

absl::Status WriteEdgeList(const Graph& g, const std::string& path) {
  return WriteStringToFile(FormatEdgeList(g), path);
}

absl::Status WriteEdgeList(const SignedGraph& g, const std::string& path) {
  return WriteStringToFile(FormatEdgeList(g), path);
}

}  // namespace coreset
