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

#ifndef CORESET_GRAPH_H_
#define CORESET_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace coreset {

// Dense vertex id in [0, n).
using VertexId = int32_t;

// Undirected edge key with u < v packed into one word.
inline uint64_t EdgeKey(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
         static_cast<uint32_t>(v);
}

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One entry of an adjacency list.
struct Neighbor {
  VertexId id = 0;
  double w = 0.0;
};

// Undirected graph with nonnegative edge weights. Edges are stored with
// u < v, sorted, and without duplicates. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Validates and normalizes the edge list: rejects self-loops, duplicate
  // undirected pairs, out-of-range ids and negative or non-finite weights.
  static absl::StatusOr<Graph> Create(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int64_t num_edges() const { return static_cast<int64_t>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Neighbor> neighbors(VertexId i) const {
    return {adjacency_.data() + offsets_[i],
            adjacency_.data() + offsets_[i + 1]};
  }

  // Weighted degree d_i.
  double degree(VertexId i) const { return degrees_[i]; }
  std::span<const double> degrees() const { return degrees_; }

  // Sum of edge weights (each edge once).
  double total_weight() const { return total_weight_; }

  // (sum_i d_i) / n; 0 for the empty vertex set.
  double avg_degree() const;

  // Recomputes degrees from the edge list and compares with the cache.
  absl::Status ValidateDegrees(double tolerance = 1e-9) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int64_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> degrees_;
  double total_weight_ = 0.0;
};

// Correlation-clustering edge. At most one of c_plus / c_minus is nonzero.
struct SignedEdge {
  VertexId u = 0;
  VertexId v = 0;
  double c_plus = 0.0;
  double c_minus = 0.0;

  double eta() const { return c_plus - c_minus; }

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Undirected graph whose edges carry agreement (c+) or disagreement (c-)
// weights. The adjacency stores eta_ij = c+_ij - c-_ij.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Input instances: both weights must lie in [0, 1].
  static absl::StatusOr<SignedGraph> Create(int n,
                                            std::vector<SignedEdge> edges);

  // Reweighted instances (core-sets): weights may exceed 1 but stay
  // nonnegative and finite.
  static absl::StatusOr<SignedGraph> CreateWeighted(
      int n, std::vector<SignedEdge> edges);

  int num_vertices() const { return n_; }
  int64_t num_edges() const { return static_cast<int64_t>(edges_.size()); }
  std::span<const SignedEdge> edges() const { return edges_; }

  // Neighbor weights are eta_ij.
  std::span<const Neighbor> neighbors(VertexId i) const {
    return {adjacency_.data() + offsets_[i],
            adjacency_.data() + offsets_[i + 1]};
  }

  // d_i = sum_j |eta_ij|.
  double degree(VertexId i) const { return degrees_[i]; }
  std::span<const double> degrees() const { return degrees_; }

  // d-_i = sum_j c-_ij.
  double minus_degree(VertexId i) const { return minus_degrees_[i]; }

  double c_plus_total() const { return c_plus_total_; }
  double c_minus_total() const { return c_minus_total_; }

  // Sum over edges of |eta|.
  double total_weight() const { return c_plus_total_ + c_minus_total_; }

  double avg_degree() const;

  absl::Status ValidateDegrees(double tolerance = 1e-9) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static absl::StatusOr<SignedGraph> Build(int n,
                                           std::vector<SignedEdge> edges,
                                           bool unit_range);

  int n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<int64_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> degrees_;
  std::vector<double> minus_degrees_;
  double c_plus_total_ = 0.0;
  double c_minus_total_ = 0.0;
};

// Single-edge checks used by Create and by the file readers.
absl::Status ValidateEdge(int n, const Edge& e);
absl::Status ValidateSignedEdge(int n, const SignedEdge& e, bool unit_range);

using AnyGraph = std::variant<Graph, SignedGraph>;

inline double AvgDegree(const AnyGraph& g) {
  return std::visit([](const auto& x) { return x.avg_degree(); }, g);
}

}  // namespace coreset

#endif  // CORESET_GRAPH_H_
