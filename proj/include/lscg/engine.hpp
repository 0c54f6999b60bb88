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
#include "lscg/tester.hpp"

namespace lscg {

struct LscgConfig {
  /// Guesses at or below the threshold are never tested.
  double threshold = 1.0;
  TesterConfig tester;
  std::uint64_t seed = 0;

  void validate() const;
};

struct EdgeDecision {
  bool accepted = false;
  /// Strong connectivity estimate; equals the threshold when no guess
  /// above it was accepted.
  double s_hat = 0.0;
  std::optional<double> g_star;
  bool below_threshold = false;
  std::uint32_t tester_runs = 0;
  ProbeStats probes;

  friend bool operator==(const EdgeDecision&, const EdgeDecision&) = default;
};

/// Final sampling constant c_scale * 64 (d+2) log n. Throws for n < 2.
double lambda(const TesterConfig& config, double n);

/// Membership of e in the sparse connected subgraph.
///
/// Runs the guess tester on g = min(deg u, deg v), g/2, g/4, ... while
/// g > threshold. The first accepted guess g* sets s_hat = g*/(2 lambda'(n))
/// and the edge is kept with probability min(1, lambda(n)/s_hat) using the
/// coin keyed ("accept", e). If every guess is rejected (or none is run)
/// the edge is kept outright, which is what keeps bridges and low-strength
/// edges in the subgraph.
EdgeDecision query_edge(ProbedView& view, EdgeRef e, const LscgConfig& config);

struct SubgraphResult {
  std::vector<EdgeRef> edges;
  std::vector<EdgeDecision> decisions;  // aligned with graph.edges()
  bool input_connected = true;
  ProbeStats total_probes;
  std::uint64_t max_query_probes = 0;
  std::uint64_t tester_runs = 0;
  std::uint64_t below_threshold = 0;
};

/// Queries every edge with its own fresh ProbedView. Edges are spread over
/// `threads` workers (0 = hardware concurrency); the result does not depend
/// on the schedule.
SubgraphResult materialize_subgraph(const Graph& graph, const LscgConfig& config,
                                    unsigned threads = 0);

bool is_connected(std::span<const EdgeRef> edges, std::uint32_t n);
bool is_connected(const Graph& graph);

}  // namespace lscg
