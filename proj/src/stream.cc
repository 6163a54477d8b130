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

#include "coreset/stream.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "absl/container/flat_hash_set.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"

#include "coreset/graph_io.h"
#include "coreset/internal/line_parser.h"
#include "coreset/random.h"

namespace coreset {
namespace {

// An event with the time at which it is emitted; ties keep creation order.
struct Timed {
  double time;
  int64_t order;
  StreamEvent event;
};

StreamEvent Insert(VertexId u, VertexId v, double w, double c_minus) {
  return {StreamOp::kInsert, u, v, w, c_minus};
}

StreamEvent Delete(StreamEvent e) {
  e.op = StreamOp::kDelete;
  return e;
}

void Shuffle(std::vector<StreamEvent>& events, Rng& rng) {
  for (size_t i = events.size(); i > 1; --i) {
    std::swap(events[i - 1], events[rng.UniformInt(i)]);
  }
}

// Shared by the plain and signed overloads. `base` holds one insert per
// graph edge in edge order.
EdgeStream BuildStream(int n, bool is_signed, std::vector<StreamEvent> base,
                       StreamOrder order, uint64_t seed) {
  EdgeStream stream;
  stream.n = n;
  stream.is_signed = is_signed;
  Rng rng(seed);
  if (order != StreamOrder::kInsertDeleteMix) {
    stream.events = std::move(base);
    if (order == StreamOrder::kShuffled) Shuffle(stream.events, rng);
    return stream;
  }

  // Every event of one edge gets increasing times, so any global order by
  // time keeps each edge's history valid.
  std::vector<Timed> timed;
  int64_t order_id = 0;
  auto times = [&rng](int count) {
    std::vector<double> t(count);
    for (double& x : t) x = rng.Uniform();
    std::sort(t.begin(), t.end());
    return t;
  };

  // About one graph edge in eight is inserted, deleted and inserted again.
  std::vector<size_t> index(base.size());
  for (size_t k = 0; k < index.size(); ++k) index[k] = k;
  const size_t churn = base.size() / 8;
  for (size_t k = 0; k < churn; ++k) {
    std::swap(index[k], index[k + rng.UniformInt(index.size() - k)]);
  }
  std::vector<bool> churned(base.size(), false);
  for (size_t k = 0; k < churn; ++k) churned[index[k]] = true;
  absl::flat_hash_set<uint64_t> present;
  for (size_t k = 0; k < base.size(); ++k) {
    const StreamEvent& e = base[k];
    present.insert(EdgeKey(e.u, e.v));
    if (churned[k]) {
      const std::vector<double> t = times(3);
      timed.push_back({t[0], order_id++, e});
      timed.push_back({t[1], order_id++, Delete(e)});
      timed.push_back({t[2], order_id++, e});
    } else {
      timed.push_back({rng.Uniform(), order_id++, e});
    }
  }

  // About one transient non-edge per four graph edges.
  const int64_t max_pairs = static_cast<int64_t>(n) * (n - 1) / 2;
  const int64_t free_pairs = max_pairs - static_cast<int64_t>(present.size());
  const int64_t transient = std::min<int64_t>(
      free_pairs, std::max<int64_t>(1, static_cast<int64_t>(base.size()) / 4));
  for (int64_t k = 0; k < transient; ++k) {
    VertexId u = 0, v = 0;
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
      u = static_cast<VertexId>(rng.UniformInt(n));
      v = static_cast<VertexId>(rng.UniformInt(n));
      found = u != v && !present.contains(EdgeKey(u, v));
    }
    if (!found) continue;
    present.insert(EdgeKey(u, v));
    const bool plus = !is_signed || rng.Bernoulli(0.5);
    const StreamEvent e = Insert(std::min(u, v), std::max(u, v),
                                 plus ? 1.0 : 0.0, plus ? 0.0 : 1.0);
    const std::vector<double> t = times(2);
    timed.push_back({t[0], order_id++, e});
    timed.push_back({t[1], order_id++, Delete(e)});
  }

  std::sort(timed.begin(), timed.end(), [](const Timed& a, const Timed& b) {
    return std::tie(a.time, a.order) < std::tie(b.time, b.order);
  });
  stream.events.reserve(timed.size());
  for (const Timed& t : timed) stream.events.push_back(t.event);
  return stream;
}

}  // namespace

absl::StatusOr<StreamOrder> ParseStreamOrder(absl::string_view name) {
  if (name == "sorted") return StreamOrder::kSorted;
  if (name == "shuffled") return StreamOrder::kShuffled;
  if (name == "insert-delete-mix" || name == "mix") {
    return StreamOrder::kInsertDeleteMix;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown stream order '", name,
      "' (expected sorted, shuffled or insert-delete-mix)"));
}

const char* StreamOrderName(StreamOrder order) {
  switch (order) {
    case StreamOrder::kSorted:
      return "sorted";
    case StreamOrder::kShuffled:
      return "shuffled";
    case StreamOrder::kInsertDeleteMix:
      return "insert-delete-mix";
  }
  return "?";
}

EdgeStream ToStream(const Graph& g, StreamOrder order, uint64_t seed) {
  std::vector<StreamEvent> base;
  base.reserve(g.num_edges());
  for (const Edge& e : g.edges()) base.push_back(Insert(e.u, e.v, e.w, 0.0));
  return BuildStream(g.num_vertices(), false, std::move(base), order, seed);
}

EdgeStream ToStream(const SignedGraph& g, StreamOrder order, uint64_t seed) {
  std::vector<StreamEvent> base;
  base.reserve(g.num_edges());
  for (const SignedEdge& e : g.edges()) {
    base.push_back(Insert(e.u, e.v, e.c_plus, e.c_minus));
  }
  return BuildStream(g.num_vertices(), true, std::move(base), order, seed);
}

absl::StatusOr<AnyGraph> ReplayStream(const EdgeStream& stream) {
  absl::flat_hash_map<uint64_t, StreamEvent> live;
  for (size_t k = 0; k < stream.events.size(); ++k) {
    const StreamEvent& e = stream.events[k];
    if (e.u < 0 || e.v < 0 || e.u >= stream.n || e.v >= stream.n ||
        e.u == e.v) {
      return absl::InvalidArgumentError(
          absl::StrCat("event ", k, ": invalid endpoints (", e.u, ", ", e.v,
                       ")"));
    }
    const uint64_t key = EdgeKey(e.u, e.v);
    if (e.op == StreamOp::kInsert) {
      if (!live.emplace(key, e).second) {
        return absl::FailedPreconditionError(absl::StrCat(
            "event ", k, ": insert of live edge (", e.u, ", ", e.v, ")"));
      }
    } else {
      auto it = live.find(key);
      if (it == live.end()) {
        return absl::FailedPreconditionError(absl::StrCat(
            "event ", k, ": delete of absent edge (", e.u, ", ", e.v, ")"));
      }
      if (std::abs(it->second.w - e.w) > 1e-12 ||
          std::abs(it->second.c_minus - e.c_minus) > 1e-12) {
        return absl::FailedPreconditionError(absl::StrCat(
            "event ", k, ": delete weight does not match insert"));
      }
      live.erase(it);
    }
  }
  if (stream.is_signed) {
    std::vector<SignedEdge> edges;
    edges.reserve(live.size());
    for (const auto& [key, e] : live) {
      edges.push_back({e.u, e.v, e.w, e.c_minus});
    }
    auto g = SignedGraph::Create(stream.n, std::move(edges));
    if (!g.ok()) return g.status();
    return AnyGraph(*std::move(g));
  }
  std::vector<Edge> edges;
  edges.reserve(live.size());
  for (const auto& [key, e] : live) edges.push_back({e.u, e.v, e.w});
  auto g = Graph::Create(stream.n, std::move(edges));
  if (!g.ok()) return g.status();
  return AnyGraph(*std::move(g));
}

absl::StatusOr<EdgeStream> ParseStream(absl::string_view text) {
  const std::vector<internal::Line> lines = internal::SplitLines(text);
  if (lines.empty()) return absl::InvalidArgumentError("empty stream file");
  auto header = internal::ParseHeader(lines.front());
  if (!header.ok()) return header.status();
  EdgeStream stream;
  stream.n = header->n;
  stream.is_signed = header->is_signed;
  const size_t arity = stream.is_signed ? 5 : 4;
  for (size_t k = 1; k < lines.size(); ++k) {
    const internal::Line& line = lines[k];
    if (line.tokens.size() != arity ||
        (line.tokens[0] != "I" && line.tokens[0] != "D")) {
      return internal::LineError(
          line, stream.is_signed ? "expected 'I|D u v c+ c-'"
                                 : "expected 'I|D u v w'");
    }
    StreamEvent e;
    e.op = line.tokens[0] == "I" ? StreamOp::kInsert : StreamOp::kDelete;
    if (!absl::SimpleAtoi(line.tokens[1], &e.u) ||
        !absl::SimpleAtoi(line.tokens[2], &e.v) ||
        !absl::SimpleAtod(line.tokens[3], &e.w) ||
        (stream.is_signed && !absl::SimpleAtod(line.tokens[4], &e.c_minus))) {
      return internal::LineError(line, "malformed number");
    }
    absl::Status valid =
        stream.is_signed
            ? ValidateSignedEdge(stream.n, {e.u, e.v, e.w, e.c_minus}, true)
            : ValidateEdge(stream.n, {e.u, e.v, e.w});
    if (!valid.ok()) return internal::LineError(line, valid.message());
    stream.events.push_back(e);
  }
  return stream;
}

std::string FormatStream(const EdgeStream& stream) {
  std::string out =
      absl::StrCat(stream.is_signed ? "signed " : "graph ", stream.n, "\n");
  for (const StreamEvent& e : stream.events) {
    absl::StrAppend(&out, e.op == StreamOp::kInsert ? "I " : "D ", e.u, " ",
                    e.v, " ", FormatDouble(e.w));
    if (stream.is_signed) absl::StrAppend(&out, " ", FormatDouble(e.c_minus));
    out += '\n';
  }
  return out;
}

absl::StatusOr<EdgeStream> ReadStreamFile(const std::string& path) {
  auto text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  auto stream = ParseStream(*text);
  if (!stream.ok()) {
    return absl::Status(stream.status().code(),
                        absl::StrCat(path, ": ", stream.status().message()));
  }
  return stream;
}

absl::Status WriteStreamFile(const EdgeStream& stream,
                             const std::string& path) {
  return WriteStringToFile(FormatStream(stream), path);
}

}  // namespace coreset
