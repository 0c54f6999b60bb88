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

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "lscg/graph.hpp"
#include "lscg/randomness.hpp"

namespace lscg {

struct SkeletonTrace {
  std::uint64_t next_neighbor_calls = 0;
  std::uint64_t sample_iterations = 0;
  /// Largest number of samples drawn inside a single next_neighbor call.
  std::uint64_t max_iterations = 0;
  /// Skeleton neighbors dropped by reachable() for lying outside the
  /// member set. Their probes are included in the view's counters.
  std::uint64_t boundary_discards = 0;
};

/// Lazily realized random skeleton G' of the graph behind a ProbedView:
/// every edge is kept independently with probability p, and the coin of an
/// edge is only drawn once some query needs it.
///
/// Per vertex u the state keeps last[u], the largest 1-based index of N(u)
/// whose presence in G' is decided (0 = nothing decided, deg(u)+1 =
/// exhausted), and P[u], the ascending indices of N(u) known to be present.
/// Index i <= last[u] with i not in P[u] means the edge is absent. Presence
/// is recorded on both endpoints, so decisions never contradict each other
/// whatever order queries arrive in.
class SkeletonState {
 public:
  SkeletonState(ProbedView& view, double p, const StreamKey& key);

  double keep_probability() const noexcept { return p_; }

  /// Next neighbor of u in G' by ascending index, or nullopt once all of
  /// N_G'(u) has been returned.
  std::optional<Vertex> next_neighbor(Vertex u);

  /// Index of u's first kept neighbor strictly inside (a, b), or b if there
  /// is none. Draws a geometric gap; cells already decided absent from the
  /// other endpoint are filtered by next_neighbor, not here.
  NeighborIndex sample_next_index(Vertex u, NeighborIndex a, NeighborIndex b);

  /// FIFO BFS closure of source in G' restricted to vertices accepted by
  /// members. Returned in discovery order, source first.
  template <class Members>
  std::vector<Vertex> reachable(Vertex source, Members&& members);

  std::vector<Vertex> reachable(Vertex source) {
    return reachable(source, [](Vertex) { return true; });
  }

  /// Calls next_neighbor on every vertex until exhausted and returns the
  /// realized edge set (canonical, sorted). On a fresh state this samples
  /// the whole skeleton; on a used state it completes the realization
  /// consistently with every answer already given.
  std::vector<EdgeRef> materialize();

  const SkeletonTrace& trace() const noexcept { return trace_; }
  /// Probes charged to the view since this state was created.
  ProbeStats probes() const { return view_->probe_count() - probes_at_start_; }

  NeighborIndex last(Vertex u) const { return cells_[u].last; }
  std::span<const NeighborIndex> known_present(Vertex u) const {
    return cells_[u].present;
  }

 private:
  struct Cell {
    NeighborIndex last = 0;
    std::uint32_t degree = kUnknownDegree;
    std::vector<NeighborIndex> present;
  };
  static constexpr std::uint32_t kUnknownDegree = UINT32_MAX;
  static constexpr std::size_t kInitialCapacity = 16;

  std::uint32_t cached_degree(Vertex u);
  bool decided_absent(const Cell& cell, NeighborIndex index) const;

  ProbedView* view_;
  double p_;
  RandomStream stream_;
  std::optional<GeometricSkip> skip_;
  std::vector<Cell> cells_;
  SkeletonTrace trace_;
  ProbeStats probes_at_start_;
};

template <class Members>
std::vector<Vertex> SkeletonState::reachable(Vertex source, Members&& members) {
  if (source >= cells_.size()) {
    throw Error(ErrorCode::kInvalidVertex, "source out of range");
  }
  if (!members(source)) {
    throw Error(ErrorCode::kInvalidInput, "source is not a member");
  }
  std::vector<char> seen(cells_.size(), 0);
  std::vector<Vertex> order;
  order.push_back(source);
  seen[source] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    while (auto w = next_neighbor(u)) {
      if (seen[*w]) continue;
      if (!members(*w)) {
        ++trace_.boundary_discards;
        continue;
      }
      seen[*w] = 1;
      order.push_back(*w);
    }
  }
  return order;
}

}  // namespace lscg
