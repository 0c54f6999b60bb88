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

#include "lscg/skeleton.hpp"

#include <algorithm>

namespace lscg {

SkeletonState::SkeletonState(ProbedView& view, double p, const StreamKey& key)
    : view_(&view),
      p_(p),
      stream_(key),
      cells_(view.vertex_count()),
      probes_at_start_(view.probe_count()) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability,
                "skeleton keep probability outside [0, 1]");
  }
  if (p > 0.0) skip_.emplace(p);
}

std::uint32_t SkeletonState::cached_degree(Vertex u) {
  auto& cell = cells_[u];
  if (cell.degree == kUnknownDegree) cell.degree = view_->degree(u);
  return cell.degree;
}

bool SkeletonState::decided_absent(const Cell& cell, NeighborIndex index) const {
  return index <= cell.last &&
         !std::binary_search(cell.present.begin(), cell.present.end(), index);
}

NeighborIndex SkeletonState::sample_next_index(Vertex /*u*/, NeighborIndex a,
                                               NeighborIndex b) {
  if (p_ == 0.0 || a + 1 >= b) return b;
  const std::uint64_t k = (*skip_)(stream_);
  const std::uint64_t candidate = static_cast<std::uint64_t>(a) + k;
  return candidate < b ? static_cast<NeighborIndex>(candidate) : b;
}

std::optional<Vertex> SkeletonState::next_neighbor(Vertex u) {
  if (u >= cells_.size()) {
    throw Error(ErrorCode::kInvalidVertex, "vertex out of range");
  }
  ++trace_.next_neighbor_calls;
  const std::uint32_t deg = cached_degree(u);
  const NeighborIndex end = deg + 1;
  auto& cu = cells_[u];
  if (cu.last >= end) return std::nullopt;

  auto known = std::upper_bound(cu.present.begin(), cu.present.end(), cu.last);
  const NeighborIndex w = known == cu.present.end() ? end : *known;

  NeighborIndex index = cu.last;
  Vertex v = 0;
  NeighborIndex back = 0;
  std::uint64_t iterations = 0;
  while (true) {
    index = sample_next_index(u, index, w);
    ++iterations;
    if (index == w) break;
    v = view_->neighbor(u, index);
    back = *view_->adjacency(v, u);
    // Already decided absent from v's side: that coin was flipped, skip it.
    if (decided_absent(cells_[v], back)) continue;
    break;
  }
  trace_.sample_iterations += iterations;
  trace_.max_iterations = std::max(trace_.max_iterations, iterations);

  if (index != w) {
    // New present edge; `known` still points at w's slot.
    if (cu.present.capacity() == 0) {
      cu.present.reserve(kInitialCapacity);
      known = cu.present.begin();
    }
    cu.present.insert(known, index);
    auto& cv = cells_[v];
    if (cv.present.capacity() == 0) cv.present.reserve(kInitialCapacity);
    cv.present.insert(
        std::lower_bound(cv.present.begin(), cv.present.end(), back), back);
  } else if (w != end) {
    v = view_->neighbor(u, w);
  }
  cu.last = index;
  if (index == end) return std::nullopt;
  return v;
}

std::vector<EdgeRef> SkeletonState::materialize() {
  const auto n = static_cast<Vertex>(cells_.size());
  for (Vertex u = 0; u < n; ++u) {
    while (next_neighbor(u)) {
    }
  }
  // Every cell is decided now; read the edges off the present sets,
  // including those found by earlier queries.
  std::vector<EdgeRef> edges;
  const Graph& g = view_->graph();
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    for (auto i : cells_[u].present) {
      if (u < nb[i - 1]) edges.push_back({u, nb[i - 1]});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace lscg
