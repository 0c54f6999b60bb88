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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lscg/engine.hpp"
#include "lscg/graph.hpp"

namespace lscg::harness {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Suites runnable by name: oracle, lemmas, skeleton, tester, endtoend,
/// scaling, sparsify, consistency, and "all".
std::vector<std::string> suite_names();

/// Throws kInvalidInput for an unknown suite.
std::vector<CriterionResult> run_suite(std::string_view suite, std::uint64_t seed);

CriterionResult check_oracle_equivalence(std::uint64_t seed);
CriterionResult check_oracle_lemmas(std::uint64_t seed);
CriterionResult check_skeleton_fidelity(std::uint64_t seed);
CriterionResult check_tester_calibration(std::uint64_t seed);
CriterionResult check_end_to_end(std::uint64_t seed);
CriterionResult check_probe_scaling(std::uint64_t seed);
CriterionResult check_sparsification(std::uint64_t seed);
CriterionResult check_consistency(std::uint64_t seed);

struct ScalingRow {
  double threshold = 0.0;
  std::uint32_t queries = 0;
  double mean_probes = 0.0;
  std::uint64_t max_probes = 0;
  ProbeStats total;
  std::uint64_t tester_runs = 0;
};

/// Mean and max probes per query for each threshold, over the same
/// `samples` edges drawn uniformly with replacement (stream keyed
/// ("scaling-edges")).
std::vector<ScalingRow> probe_scaling(const Graph& graph,
                                      std::span<const double> thresholds,
                                      const LscgConfig& base,
                                      std::uint32_t samples,
                                      std::uint64_t sample_seed);

/// Fitted c1 in |E*| <= c1 * n * (T + log2(n)^2).
double edge_count_constant(std::uint64_t accepted, std::uint32_t n, double threshold);

}  // namespace lscg::harness
