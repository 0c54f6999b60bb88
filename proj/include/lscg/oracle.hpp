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
#include <optional>
#include <span>
#include <vector>

#include "lscg/graph.hpp"

namespace lscg {

struct CutResult {
  std::uint64_t value = 0;
  /// One side of the cut, ascending. Never empty and never all of V.
  std::vector<Vertex> side;
};

/// Global minimum edge cut (Stoer-Wagner). A disconnected graph yields
/// value 0 with one component as the side. Requires n >= 2.
CutResult min_cut(const Graph& graph);

/// Minimum cut of the subgraph induced by `vertices` (at least 2).
CutResult min_cut_induced(const Graph& graph, std::span<const Vertex> vertices);

/// Exact strong connectivity per edge: the largest k such that the edge
/// lies in a vertex-induced subgraph with minimum cut >= k.
struct StrongConnMap {
  std::vector<EdgeRef> edges;  // graph.edges() order
  std::vector<std::uint32_t> strength;

  std::optional<std::uint32_t> at(EdgeRef e) const;
  friend bool operator==(const StrongConnMap&, const StrongConnMap&) = default;
};

/// Recursive min-cut decomposition. Any induced subgraph with min cut
/// k > c lies on one side of every c-cut, so splitting along one minimum
/// cut and recursing never loses a value.
StrongConnMap exact_strong_connectivities(const Graph& graph);

inline constexpr std::uint32_t kBruteForceMaxVertices = 12;
inline constexpr std::uint32_t kCutEnumerationMaxVertices = 14;

/// Direct transcription of the definition: maximum over every vertex subset
/// W containing the edge, with G[W] connected, of the min cut of G[W], the
/// latter also by exhaustive enumeration. Throws kTooLarge for n > 12.
StrongConnMap brute_force_strong_connectivities(const Graph& graph);

struct CutValue {
  /// Bit i set iff vertex i is on the side that excludes vertex 0.
  std::uint32_t side_mask = 0;
  double value = 0.0;
};

/// Weighted value of each of the 2^(n-1) - 1 cuts. `weights` is aligned
/// with graph.edges(). Throws kTooLarge for n > 14.
std::vector<CutValue> enumerate_cut_values(const Graph& graph,
                                           std::span<const double> weights);

/// Fraction of trials in which a skeleton keeping edge e with probability
/// p_map[e] and weight 1/p_map[e] preserves every cut of the graph within
/// (1 +- epsilon). `p_map` is aligned with graph.edges(), entries in (0, 1].
double verify_sparsification(const Graph& graph, std::span<const double> p_map,
                             double epsilon, std::uint32_t trials,
                             std::uint64_t seed);

}  // namespace lscg
