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

#include "lscg/graph.hpp"

namespace lscg {

struct TesterConfig {
  /// Error exponent: failure probability targets are O(n^-d).
  double d = 2.0;
  /// Multiplier on both oversampling constants. 1 is the asymptotic
  /// setting; values around 0.1 make p < 1 reachable at small n.
  double c_scale = 1.0;
  double log_base = 2.0;
  std::optional<std::uint32_t> rounds_override;

  void validate() const;
};

enum class Verdict : std::uint8_t { kAccept, kReject };

struct TesterOutcome {
  Verdict verdict = Verdict::kReject;
  std::uint32_t rounds_run = 0;
  std::size_t final_s_size = 0;
  ProbeStats probes;
  /// Worst resample loop length seen in any skeleton of this test.
  std::uint64_t max_resample_iterations = 0;
};

/// max(1, log_base(x)); floored so tiny components never get p = 0.
double clamped_log(const TesterConfig& config, double x);

/// Per-round oversampling constant c_scale * 12 (d+2) log|S|.
/// Throws kDegenerateComponent for s < 2.
double lambda_prime(const TesterConfig& config, double s);

/// ceil(log_{3/2} n), or the override when set.
std::uint32_t round_budget(const TesterConfig& config, std::uint32_t n);

/// Guess tester for the strong connectivity of e = (u, v), u the smaller
/// endpoint. Starting from S = V, each round samples a skeleton with
/// p = min(1, lambda'(|S|) / g) keyed ("skel", e, g, round), shrinks S to
/// u's skeleton component inside S and rejects as soon as v falls out.
/// Accepts after the full round budget.
TesterOutcome test_guess(ProbedView& view, EdgeRef e, double guess,
                         const TesterConfig& config, std::uint64_t seed);

}  // namespace lscg
