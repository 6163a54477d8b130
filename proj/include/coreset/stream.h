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

#ifndef CORESET_STREAM_H_
#define CORESET_STREAM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

#include "coreset/graph.h"

namespace coreset {

enum class StreamOp : uint8_t { kInsert, kDelete };

// One turnstile update. For plain graphs `w` is the edge weight; for signed
// graphs `w` is c+ and `c_minus` is c-.
struct StreamEvent {
  StreamOp op = StreamOp::kInsert;
  VertexId u = 0;
  VertexId v = 0;
  double w = 1.0;
  double c_minus = 0.0;

  // |eta| for signed events, the weight otherwise.
  double magnitude() const { return w + c_minus; }

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

struct EdgeStream {
  int n = 0;
  bool is_signed = false;
  std::vector<StreamEvent> events;
};

enum class StreamOrder { kSorted, kShuffled, kInsertDeleteMix };

absl::StatusOr<StreamOrder> ParseStreamOrder(absl::string_view name);
const char* StreamOrderName(StreamOrder order);

// Serializes a graph as an edge stream. kSorted emits inserts in edge
// order, kShuffled in a seeded random order. kInsertDeleteMix interleaves
// the graph's inserts with transient edges that are inserted and later
// deleted, and with graph edges that are deleted and inserted again, so the
// net effect is the graph itself.
EdgeStream ToStream(const Graph& g, StreamOrder order, uint64_t seed);
EdgeStream ToStream(const SignedGraph& g, StreamOrder order, uint64_t seed);

// Applies the stream to an empty graph. Fails on a delete that does not match
// a live edge (including its weights) or an insert of a live edge.
absl::StatusOr<AnyGraph> ReplayStream(const EdgeStream& stream);

// Stream file: header "graph <n>" or "signed <n>", then one event per line,
// "I u v w" / "D u v w" (signed: "I u v c+ c-"). '#' starts a comment.
absl::StatusOr<EdgeStream> ReadStreamFile(const std::string& path);
absl::Status WriteStreamFile(const EdgeStream& stream, const std::string& path);
absl::StatusOr<EdgeStream> ParseStream(absl::string_view text);
std::string FormatStream(const EdgeStream& stream);

}  // namespace coreset

#endif  // CORESET_STREAM_H_
