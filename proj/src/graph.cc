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

#include "coreset/graph.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace coreset {
namespace {

absl::Status CheckEndpoints(int n, VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= n || v >= n) {
    return absl::OutOfRangeError(
        absl::StrCat("edge (", u, ", ", v, ") has an endpoint outside [0, ",
                     n, ")"));
  }
  if (u == v) {
    return absl::InvalidArgumentError(
        absl::StrCat("self-loop at vertex ", u));
  }
  return absl::OkStatus();
}

// Sorts by (u, v) after orienting u < v and rejects repeated pairs.
template <typename E>
absl::Status NormalizeEdges(std::vector<E>& edges) {
  for (E& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const E& a, const E& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      return absl::InvalidArgumentError(absl::StrCat(
          "duplicate edge (", edges[i].u, ", ", edges[i].v, ")"));
    }
  }
  return absl::OkStatus();
}

// Fills CSR arrays; `weight` maps an edge to its adjacency weight.
template <typename E, typename WeightFn>
void BuildAdjacency(int n, const std::vector<E>& edges, WeightFn weight,
                    std::vector<int64_t>& offsets,
                    std::vector<Neighbor>& adjacency) {
  offsets.assign(n + 1, 0);
  for (const E& e : edges) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  adjacency.resize(offsets[n]);
  std::vector<int64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const E& e : edges) {
    const double w = weight(e);
    adjacency[cursor[e.u]++] = {e.v, w};
    adjacency[cursor[e.v]++] = {e.u, w};
  }
}

}  // namespace

absl::Status ValidateEdge(int n, const Edge& e) {
  if (auto status = CheckEndpoints(n, e.u, e.v); !status.ok()) return status;
  if (!std::isfinite(e.w) || e.w < 0.0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "edge (", e.u, ", ", e.v, ") has invalid weight ", e.w));
  }
  return absl::OkStatus();
}

absl::Status ValidateSignedEdge(int n, const SignedEdge& e, bool unit_range) {
  if (auto status = CheckEndpoints(n, e.u, e.v); !status.ok()) return status;
  const bool finite = std::isfinite(e.c_plus) && std::isfinite(e.c_minus);
  if (!finite || e.c_plus < 0.0 || e.c_minus < 0.0 ||
      (unit_range && (e.c_plus > 1.0 || e.c_minus > 1.0))) {
    return absl::InvalidArgumentError(absl::StrCat(
        "edge (", e.u, ", ", e.v, ") has weights (", e.c_plus, ", ",
        e.c_minus, ") outside ", unit_range ? "[0, 1]" : "[0, inf)"));
  }
  if (e.c_plus != 0.0 && e.c_minus != 0.0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "edge (", e.u, ", ", e.v, ") has both c+ and c- nonzero"));
  }
  return absl::OkStatus();
}

absl::StatusOr<Graph> Graph::Create(int n, std::vector<Edge> edges) {
  if (n < 0) return absl::InvalidArgumentError("negative vertex count");
  for (const Edge& e : edges) {
    if (auto status = ValidateEdge(n, e); !status.ok()) return status;
  }
  if (auto status = NormalizeEdges(edges); !status.ok()) return status;

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  BuildAdjacency(
      n, g.edges_, [](const Edge& e) { return e.w; }, g.offsets_,
      g.adjacency_);
  g.degrees_.assign(n, 0.0);
  for (const Edge& e : g.edges_) {
    g.degrees_[e.u] += e.w;
    g.degrees_[e.v] += e.w;
    g.total_weight_ += e.w;
  }
  return g;
}

double Graph::avg_degree() const {
  if (n_ == 0) return 0.0;
  return 2.0 * total_weight_ / n_;
}

absl::Status Graph::ValidateDegrees(double tolerance) const {
  std::vector<double> recomputed(n_, 0.0);
  for (const Edge& e : edges_) {
    recomputed[e.u] += e.w;
    recomputed[e.v] += e.w;
  }
  for (int i = 0; i < n_; ++i) {
    if (std::abs(recomputed[i] - degrees_[i]) > tolerance) {
      return absl::InternalError(absl::StrCat(
          "degree of vertex ", i, " is ", degrees_[i], ", expected ",
          recomputed[i]));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<SignedGraph> SignedGraph::Create(
    int n, std::vector<SignedEdge> edges) {
  return Build(n, std::move(edges), /*unit_range=*/true);
}

absl::StatusOr<SignedGraph> SignedGraph::CreateWeighted(
    int n, std::vector<SignedEdge> edges) {
  return Build(n, std::move(edges), /*unit_range=*/false);
}

absl::StatusOr<SignedGraph> SignedGraph::Build(int n,
                                               std::vector<SignedEdge> edges,
                                               bool unit_range) {
  if (n < 0) return absl::InvalidArgumentError("negative vertex count");
  for (const SignedEdge& e : edges) {
    if (auto status = ValidateSignedEdge(n, e, unit_range); !status.ok()) {
      return status;
    }
  }
  if (auto status = NormalizeEdges(edges); !status.ok()) return status;

  SignedGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  BuildAdjacency(
      n, g.edges_, [](const SignedEdge& e) { return e.eta(); }, g.offsets_,
      g.adjacency_);
  g.degrees_.assign(n, 0.0);
  g.minus_degrees_.assign(n, 0.0);
  for (const SignedEdge& e : g.edges_) {
    const double abs_eta = std::abs(e.eta());
    g.degrees_[e.u] += abs_eta;
    g.degrees_[e.v] += abs_eta;
    g.minus_degrees_[e.u] += e.c_minus;
    g.minus_degrees_[e.v] += e.c_minus;
    g.c_plus_total_ += e.c_plus;
    g.c_minus_total_ += e.c_minus;
  }
  return g;
}

double SignedGraph::avg_degree() const {
  if (n_ == 0) return 0.0;
  double sum = 0.0;
  for (double d : degrees_) sum += d;
  return sum / n_;
}

absl::Status SignedGraph::ValidateDegrees(double tolerance) const {
  std::vector<double> recomputed(n_, 0.0);
  for (const SignedEdge& e : edges_) {
    recomputed[e.u] += std::abs(e.eta());
    recomputed[e.v] += std::abs(e.eta());
  }
  for (int i = 0; i < n_; ++i) {
    if (std::abs(recomputed[i] - degrees_[i]) > tolerance) {
      return absl::InternalError(absl::StrCat(
          "degree of vertex ", i, " is ", degrees_[i], ", expected ",
          recomputed[i]));
    }
  }
  return absl::OkStatus();
}

}  // namespace coreset
