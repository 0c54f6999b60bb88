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

#include "lscg/tester.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lscg/skeleton.hpp"

namespace lscg {

void TesterConfig::validate() const {
  if (!(d >= 0.0)) throw Error(ErrorCode::kInvalidConfig, "d must be >= 0");
  if (!(c_scale > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "c_scale must be > 0");
  }
  if (!(log_base > 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "log base must be > 1");
  }
  if (rounds_override && *rounds_override == 0) {
    throw Error(ErrorCode::kInvalidConfig, "rounds override must be positive");
  }
}

double clamped_log(const TesterConfig& config, double x) {
  return std::max(1.0, std::log(x) / std::log(config.log_base));
}

double lambda_prime(const TesterConfig& config, double s) {
  if (!(s >= 2.0)) {
    throw Error(ErrorCode::kDegenerateComponent,
                "lambda' needs a component of at least 2 vertices");
  }
  return config.c_scale * 12.0 * (config.d + 2.0) * clamped_log(config, s);
}

std::uint32_t round_budget(const TesterConfig& config, std::uint32_t n) {
  if (config.rounds_override) return *config.rounds_override;
  // Smallest r with 1.5^r >= n, by exact integer comparison 3^r >= n 2^r.
  std::uint32_t r = 0;
  long double lhs = 1.0L;
  long double rhs = n;
  while (lhs < rhs) {
    lhs *= 3.0L;
    rhs *= 2.0L;
    ++r;
  }
  return r;
}

TesterOutcome test_guess(ProbedView& view, EdgeRef e, double guess,
                         const TesterConfig& config, std::uint64_t seed) {
  config.validate();
  if (!(guess > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "guess must be positive");
  }
  const std::uint32_t n = view.vertex_count();
  if (e.a >= e.b || e.b >= n || !view.adjacency(e.a, e.b)) {
    throw Error(ErrorCode::kInvalidEdge, "tested pair is not an edge");
  }
  const ProbeStats start = view.probe_count();
  const Vertex u = e.a;
  const Vertex v = e.b;
  const std::uint32_t budget = round_budget(config, n);

  std::vector<char> in_s(n, 1);
  std::size_t s_size = n;
  TesterOutcome out;
  out.verdict = Verdict::kAccept;
  for (std::uint32_t round = 0; round < budget; ++round) {
    const double p =
        std::min(1.0, lambda_prime(config, static_cast<double>(s_size)) / guess);
    SkeletonState skeleton(
        view, p,
        StreamKey(seed, {std::string("skel"), std::int64_t{e.a},
                         std::int64_t{e.b}, double_label(guess),
                         std::int64_t{round}}));
    auto component = skeleton.reachable(u, [&](Vertex w) { return in_s[w] != 0; });
    out.max_resample_iterations =
        std::max(out.max_resample_iterations, skeleton.trace().max_iterations);
    out.rounds_run = round + 1;

    std::vector<char> next(n, 0);
    for (Vertex w : component) next[w] = 1;
    in_s.swap(next);
    s_size = component.size();
    if (!in_s[v]) {
      out.verdict = Verdict::kReject;
      break;
    }
  }
  out.final_s_size = s_size;
  out.probes = view.probe_count() - start;
  return out;
}

}  // namespace lscg
