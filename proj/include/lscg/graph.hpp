// Copyright 2026 The lscg Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "lscg/error.hpp"

namespace lscg {

using Vertex = std::uint32_t;
/// 1-based position inside a sorted adjacency list.
using NeighborIndex = std::uint32_t;

/// Canonical undirected edge key, always a < b.
struct EdgeRef {
  Vertex a = 0;
  Vertex b = 0;

  static EdgeRef canonical(Vertex u, Vertex v) {
    return u < v ? EdgeRef{u, v} : EdgeRef{v, u};
  }

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Immutable simple undirected graph in CSR form. Neighbor lists are
/// strictly ascending. This is the full-access representation; online
/// algorithms only see it through a ProbedView.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Rejects self-loops, duplicates and
  /// out-of-range endpoints (ErrorCode::kInvalidInput).
  static Graph from_edges(std::uint32_t n, std::span<const EdgeRef> edges);

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::uint64_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::uint32_t degree(Vertex u) const {
    return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
  }
  bool has_edge(Vertex u, Vertex v) const;

  /// Canonical edges in lexicographic order.
  std::vector<EdgeRef> edges() const;

  /// Position of e in edges(), or nullopt.
  std::optional<std::size_t> edge_position(EdgeRef e) const;

  std::uint32_t min_degree() const;
  std::uint32_t max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> targets_;
  // Prefix count of canonical (u < v) entries per vertex, for edge_position.
  std::vector<std::uint64_t> forward_offsets_{0};
};

/// Parses "n m" followed by m lines "u v". Errors carry the line number.
Graph load_edge_list(std::istream& in);

/// Writes the canonical, lexicographically sorted edge list.
void write_edge_list(std::ostream& out, const Graph& graph);
void write_edge_list(std::ostream& out, std::uint32_t n,
                     std::span<const EdgeRef> edges);

struct ProbeStats {
  std::uint64_t degree_probes = 0;
  std::uint64_t neighbor_probes = 0;
  std::uint64_t adjacency_probes = 0;

  std::uint64_t total() const noexcept {
    return degree_probes + neighbor_probes + adjacency_probes;
  }

  ProbeStats& operator+=(const ProbeStats& other) {
    degree_probes += other.degree_probes;
    neighbor_probes += other.neighbor_probes;
    adjacency_probes += other.adjacency_probes;
    return *this;
  }
  friend ProbeStats operator-(ProbeStats lhs, const ProbeStats& rhs) {
    lhs.degree_probes -= rhs.degree_probes;
    lhs.neighbor_probes -= rhs.neighbor_probes;
    lhs.adjacency_probes -= rhs.adjacency_probes;
    return lhs;
  }
  friend bool operator==(const ProbeStats&, const ProbeStats&) = default;
};

/// The probe interface: degree, i-th neighbor and adjacency queries, each
/// counted. Single owner; the graph must outlive the view.
class ProbedView {
 public:
  explicit ProbedView(const Graph& graph) : graph_(&graph) {}

  /// n is public knowledge in the probe model and is not charged.
  std::uint32_t vertex_count() const noexcept { return graph_->vertex_count(); }
  /// Uncharged access for offline bookkeeping, never for algorithm steps.
  const Graph& graph() const noexcept { return *graph_; }

  std::uint32_t degree(Vertex u) {
    check_vertex(u);
    ++stats_.degree_probes;
    return graph_->degree(u);
  }

  /// i is 1-based.
  Vertex neighbor(Vertex u, NeighborIndex i) {
    check_vertex(u);
    auto nb = graph_->neighbors(u);
    if (i < 1 || i > nb.size()) [[unlikely]] throw_invalid_index(i);
    ++stats_.neighbor_probes;
    return nb[i - 1];
  }

  /// 1-based index of v in N(u), or nullopt when (u, v) is not an edge.
  std::optional<NeighborIndex> adjacency(Vertex u, Vertex v);

  const ProbeStats& probe_count() const noexcept { return stats_; }

 private:
  void check_vertex(Vertex u) const {
    if (u >= graph_->vertex_count()) [[unlikely]] throw_invalid_vertex(u);
  }
  [[noreturn]] static void throw_invalid_vertex(Vertex u);
  [[noreturn]] static void throw_invalid_index(NeighborIndex i);

  const Graph* graph_;
  ProbeStats stats_;
};

}  // namespace lscg
