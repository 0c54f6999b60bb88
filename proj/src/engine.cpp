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

#include "lscg/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <string>

#include "lscg/randomness.hpp"
#include "lscg/union_find.hpp"

namespace lscg {

void LscgConfig::validate() const {
  if (!(threshold >= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "threshold T must be >= 1");
  }
  tester.validate();
}

double lambda(const TesterConfig& config, double n) {
  if (!(n >= 2.0)) {
    throw Error(ErrorCode::kDegenerateComponent, "lambda needs n >= 2");
  }
  return config.c_scale * 64.0 * (config.d + 2.0) * clamped_log(config, n);
}

EdgeDecision query_edge(ProbedView& view, EdgeRef e, const LscgConfig& config) {
  config.validate();
  const ProbeStats start = view.probe_count();
  const std::uint32_t n = view.vertex_count();
  if (e.a >= e.b || e.b >= n || !view.adjacency(e.a, e.b)) {
    throw Error(ErrorCode::kInvalidEdge, "queried pair is not an edge");
  }

  EdgeDecision out;
  double g = std::min(view.degree(e.a), view.degree(e.b));
  while (g > config.threshold) {
    auto outcome = test_guess(view, e, g, config.tester, config.seed);
    ++out.tester_runs;
    if (outcome.verdict == Verdict::kAccept) {
      out.g_star = g;
      out.s_hat = g / (2.0 * lambda_prime(config.tester, n));
      break;
    }
    g /= 2.0;
  }

  if (!out.g_star) {
    out.below_threshold = true;
    out.s_hat = config.threshold;
    out.accepted = true;
  } else {
    const double p = std::min(1.0, lambda(config.tester, n) / out.s_hat);
    auto coin = derive(config.seed, {std::string("accept"), std::int64_t{e.a},
                                     std::int64_t{e.b}});
    out.accepted = bernoulli(coin, p);
  }
  out.probes = view.probe_count() - start;
  return out;
}

SubgraphResult materialize_subgraph(const Graph& graph,
                                    const LscgConfig& config, unsigned threads) {
  config.validate();
  SubgraphResult out;
  out.input_connected = is_connected(graph);
  const auto edges = graph.edges();
  out.decisions.resize(edges.size());

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(1, edges.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < edges.size(); i = next++) {
        ProbedView view(graph);
        out.decisions[i] = query_edge(view, edges[i], config);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = edges.size();
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& decision = out.decisions[i];
    out.total_probes += decision.probes;
    out.max_query_probes = std::max(out.max_query_probes, decision.probes.total());
    out.tester_runs += decision.tester_runs;
    if (decision.below_threshold) ++out.below_threshold;
    if (decision.accepted) out.edges.push_back(edges[i]);
  }
  return out;
}

bool is_connected(std::span<const EdgeRef> edges, std::uint32_t n) {
  if (n <= 1) return true;
  UnionFind uf(n);
  for (const auto& e : edges) {
    if (uf.unite(e.a, e.b) && uf.set_count() == 1) return true;
  }
  return uf.set_count() == 1;
}

bool is_connected(const Graph& graph) {
  auto edges = graph.edges();
  return is_connected(edges, graph.vertex_count());
}

}  // namespace lscg
